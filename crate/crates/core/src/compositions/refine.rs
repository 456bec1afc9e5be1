use super::Composition;

/// Tests whether `fine` refines `coarse`: its indices split into groups
/// `I_0, ..., I_{p-1}` with `sum_{i in I_j} fine_i = coarse_j`.
///
/// Returns one witnessing partition (group `j` lists indices of `fine`).
/// Zero parts of `fine` are placed in the first group that can hold them.
pub fn is_refinement(fine: &Composition, coarse: &Composition) -> Option<Vec<Vec<usize>>> {
    if fine.n() != coarse.n() {
        return None;
    }
    let mut items: Vec<usize> = (0..fine.q()).filter(|&i| fine.parts()[i] > 0).collect();
    items.sort_by_key(|&i| (std::cmp::Reverse(fine.parts()[i]), i));
    let mut remaining: Vec<u32> = coarse.parts().to_vec();
    let mut assignment = vec![usize::MAX; fine.q()];
    if !place(fine.parts(), &items, &mut remaining, &mut assignment) {
        return None;
    }
    let mut groups = vec![Vec::new(); coarse.q()];
    for (i, &g) in assignment.iter().enumerate() {
        groups[if g == usize::MAX { 0 } else { g }].push(i);
    }
    Some(groups)
}

fn place(values: &[u32], items: &[usize], remaining: &mut [u32], assignment: &mut [usize]) -> bool {
    let Some((&item, rest)) = items.split_first() else {
        return remaining.iter().all(|&r| r == 0);
    };
    let v = values[item];
    let mut tried: Vec<u32> = Vec::new();
    for bin in 0..remaining.len() {
        let cap = remaining[bin];
        if cap < v || tried.contains(&cap) {
            continue;
        }
        tried.push(cap);
        remaining[bin] -= v;
        assignment[item] = bin;
        if place(values, rest, remaining, assignment) {
            return true;
        }
        remaining[bin] += v;
    }
    assignment[item] = usize::MAX;
    false
}
