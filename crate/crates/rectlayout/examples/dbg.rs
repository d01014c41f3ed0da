use rectlayout::fixtures;
use rectlayout::graph::*;
use rectlayout::rel::*;
use rectlayout::init::initial_rel;

fn main() {
    // 1. chord fixture
    let g = fixtures::fix_chord();
    let rep = validate_extended(&g);
    println!("fix_chord ok={} violations={:?}", rep.ok, rep.violations);

    // 2. fix_nest
    let g = fixtures::fix_nest();
    let rep = validate_extended(&g);
    println!("fix_nest ok={} violations={:?}", rep.ok, rep.violations);
    let cycles = find_separating_four_cycles(&g);
    for c in &cycles {
        let names: Vec<_> = c.vertices.iter().map(|v| g.graph.name(*v)).collect();
        println!("  4cycle {:?} interior={} nontrivial={}", names, c.interior_size(), c.is_nontrivial());
    }

    // 3. toggle: find the failing fixture/edge
    for (name, g) in [("fix_pin", fixtures::fix_pin()), ("staircase", fixtures::staircase()), ("stack3", fixtures::stack3())] {
        let rel = initial_rel(&g).unwrap();
        for i in 0..rel.labels().len() {
            let Some(mut lab) = rel.labels()[i] else { continue };
            lab.color = lab.color.other();
            let mut labels = rel.labels().to_vec();
            labels[i] = Some(lab);
            let mutated = RegularEdgeLabeling::from_labels(g.clone(), labels).unwrap();
            if validate_rel(&mutated).ok {
                let (u, v) = g.graph.edge(rectlayout::graph::EIdx(i as u32));
                println!("{name}: toggling edge {} ({}-{}) stays valid!", i, g.graph.name(u), g.graph.name(v));
            }
        }
    }
}
