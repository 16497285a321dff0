//! Chain maps between the two resolutions: `F` from the bar resolution to the
//! Koszul one and `G` back.

use num_bigint::BigInt;

use super::bar::{BarChain, BarSymbol};
use super::group_ring::GroupRingElement;
use super::koszul::{KoszulChain, KoszulIndex};
use crate::algebra::arith::carry_unchecked;
use crate::algebra::{FiniteAbelianGroup, GroupElement};
use crate::error::{Error, Result};

fn check_interval(group: &FiniteAbelianGroup, r: usize, a: usize, b: usize, k: usize) -> Result<()> {
    if r >= group.rank() {
        return Err(Error::IndexOutOfRange(format!(
            "position {} in a group of rank {}",
            r + 1,
            group.rank()
        )));
    }
    if a == 0 || a > b || b > k {
        return Err(Error::IndexOutOfRange(format!(
            "interval [{a},{b}] in a tuple of length {k}"
        )));
    }
    Ok(())
}

/// Product of the carries `[(α_{b,r} + α_{b-1,r}) / m_r] ... ` over the row
/// pairs `(top, top-1), (top-2, top-3), ...` down to `(bottom+1, bottom)`.
fn carry_product(group: &FiniteAbelianGroup, r: usize, bottom: usize, top: usize, alpha: &[GroupElement]) -> u64 {
    let m = group.modulus(r);
    let mut acc = 1u64;
    let mut hi = top;
    while hi > bottom {
        let c = carry_unchecked(alpha[hi - 1].exps()[r], alpha[hi - 2].exps()[r], m);
        if c == 0 {
            return 0;
        }
        acc *= c;
        hi -= 2;
    }
    acc
}

/// `g_1^{Σ α_{u1}} ... g_{r-1}^{Σ α_{u,r-1}}`, the sums running over rows `a..=b`.
fn prefix(group: &FiniteAbelianGroup, r: usize, a: usize, b: usize, alpha: &[GroupElement]) -> GroupElement {
    let mut exps = vec![0u64; group.rank()];
    for (j, e) in exps.iter_mut().enumerate().take(r) {
        let m = group.modulus(j);
        *e = alpha[a - 1..b].iter().map(|g| g.exps()[j]).sum::<u64>() % m;
    }
    GroupElement::from_raw(exps)
}

/// `ξ^α_{r,[a,b]}` with a 0-based position `r` and 1-based rows `a <= b`.
///
/// For odd `b - a` this is the carry product down to the pair `(a+1, a)` times
/// the prefix; for even `b - a` the carries stop at `(a+2, a+1)` and a trailing
/// `(g_r)_{α_{a,r}}` appears.
pub fn xi(group: &FiniteAbelianGroup, r: usize, a: usize, b: usize, alpha: &[GroupElement]) -> Result<GroupRingElement> {
    check_interval(group, r, a, b, alpha.len())?;
    Ok(xi_unchecked(group, r, a, b, alpha))
}

fn xi_unchecked(group: &FiniteAbelianGroup, r: usize, a: usize, b: usize, alpha: &[GroupElement]) -> GroupRingElement {
    let pre = prefix(group, r, a, b, alpha);
    if (b - a) % 2 == 1 {
        let c = carry_product(group, r, a, b, alpha);
        GroupRingElement::from_term(pre, c)
    } else {
        let c = carry_product(group, r, a + 1, b, alpha);
        if c == 0 {
            return GroupRingElement::zero();
        }
        GroupRingElement::geometric(group, r, alpha[a - 1].exps()[r])
            .shift(group, &pre)
            .scale(&BigInt::from(c))
    }
}

/// `η^α_{r,[a,b]}`, the augmentation of `ξ`.
pub fn eta(group: &FiniteAbelianGroup, r: usize, a: usize, b: usize, alpha: &[GroupElement]) -> Result<u64> {
    check_interval(group, r, a, b, alpha.len())?;
    Ok(eta_unchecked(group, r, a, b, alpha))
}

pub(crate) fn eta_unchecked(group: &FiniteAbelianGroup, r: usize, a: usize, b: usize, alpha: &[GroupElement]) -> u64 {
    if (b - a) % 2 == 1 {
        carry_product(group, r, a, b, alpha)
    } else {
        carry_product(group, r, a + 1, b, alpha) * alpha[a - 1].exps()[r]
    }
}

/// `F_k([g^{α_1}, ..., g^{α_k}])`. `F_0` sends `[ ]` to `Φ_∅`.
pub fn chain_map_f(group: &FiniteAbelianGroup, alpha: &[GroupElement]) -> Result<KoszulChain> {
    for g in alpha {
        group.check(g)?;
    }
    let k = alpha.len();
    if k == 0 {
        return Ok(KoszulChain::generator(group, KoszulIndex::empty()));
    }
    let mut out = KoszulChain::zero();
    for idx in KoszulIndex::all(group.rank(), k) {
        let mut coeff = GroupRingElement::one(group);
        for blk in idx.blocks() {
            let x = xi_unchecked(group, blk.position, blk.a, blk.b, alpha);
            if x.is_zero() {
                coeff = GroupRingElement::zero();
                break;
            }
            coeff = coeff.mul(&x, group);
        }
        if coeff.is_zero() {
            continue;
        }
        if idx.sign_exponent() % 2 == 1 {
            coeff = coeff.neg();
        }
        out.add_term(idx, coeff);
    }
    Ok(out)
}

/// `F` extended `ZG`-linearly to bar chains.
pub fn chain_map_f_chain(group: &FiniteAbelianGroup, chain: &BarChain) -> Result<KoszulChain> {
    let mut out = KoszulChain::zero();
    for (sym, c) in chain.terms() {
        out.add_assign(&chain_map_f(group, sym.entries())?.scale_left(c, group));
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Slot {
    Gen(usize),
    Norm(usize),
}

/// `Λ_{r^λ}`: alternating `g_r` and `N_r`, always ending in `g_r`.
fn lambda_sequence(r: usize, lambda: u32) -> Vec<Slot> {
    (0..lambda)
        .map(|i| {
            if (lambda - 1 - i) % 2 == 0 {
                Slot::Gen(r)
            } else {
                Slot::Norm(r)
            }
        })
        .collect()
}

/// All shuffles of blocks with the given sizes, as `(owner block per slot, parity)`.
fn shuffles(sizes: &[usize]) -> Vec<(Vec<usize>, bool)> {
    let total: usize = sizes.iter().sum();
    let mut out = Vec::new();
    let mut left = sizes.to_vec();
    let mut word = Vec::with_capacity(total);
    shuffle_rec(&mut left, &mut word, 0, total, &mut out);
    out
}

// `inv` counts pairs where a later block's element precedes an earlier block's element.
fn shuffle_rec(left: &mut [usize], word: &mut Vec<usize>, inv: usize, total: usize, out: &mut Vec<(Vec<usize>, bool)>) {
    if word.len() == total {
        out.push((word.clone(), inv % 2 == 1));
        return;
    }
    for b in 0..left.len() {
        if left[b] == 0 {
            continue;
        }
        // placing an element of block b before the remaining elements of blocks < b
        let jumped: usize = left[..b].iter().sum();
        left[b] -= 1;
        word.push(b);
        shuffle_rec(left, word, inv + jumped, total, out);
        word.pop();
        left[b] += 1;
    }
}

/// Expands the shuffled slot sequences and feeds every raw bar symbol (before
/// normalization) with its sign to `sink`.
fn for_each_g_term(group: &FiniteAbelianGroup, idx: &KoszulIndex, mut sink: impl FnMut(Vec<GroupElement>, bool)) {
    let seqs: Vec<Vec<Slot>> = idx.pairs().iter().map(|&(r, l)| lambda_sequence(r, l)).collect();
    let sizes: Vec<usize> = seqs.iter().map(Vec::len).collect();
    for (word, odd) in shuffles(&sizes) {
        let mut cursor = vec![0usize; seqs.len()];
        let slots: Vec<Slot> = word
            .iter()
            .map(|&b| {
                let s = seqs[b][cursor[b]];
                cursor[b] += 1;
                s
            })
            .collect();
        expand_slots(group, &slots, 0, &mut Vec::with_capacity(slots.len()), odd, &mut sink);
    }
}

fn expand_slots(
    group: &FiniteAbelianGroup,
    slots: &[Slot],
    pos: usize,
    acc: &mut Vec<GroupElement>,
    odd: bool,
    sink: &mut impl FnMut(Vec<GroupElement>, bool),
) {
    if pos == slots.len() {
        sink(acc.clone(), odd);
        return;
    }
    match slots[pos] {
        Slot::Gen(r) => {
            acc.push(group.generator(r));
            expand_slots(group, slots, pos + 1, acc, odd, sink);
            acc.pop();
        }
        Slot::Norm(r) => {
            for j in 0..group.modulus(r) {
                acc.push(group.pow_unchecked(&group.generator(r), j as i64));
                expand_slots(group, slots, pos + 1, acc, odd, sink);
                acc.pop();
            }
        }
    }
}

/// `G_k(Φ_idx) = Σ_σ sign(σ) [σ(Λ_{r_1^{λ_1}}, ..., Λ_{r_l^{λ_l}})]` with every
/// `N_r` slot expanded to `Σ_j g_r^j`. `G_0` sends `Φ_∅` to `[ ]`.
pub fn chain_map_g(group: &FiniteAbelianGroup, idx: &KoszulIndex) -> Result<BarChain> {
    if !idx.fits(group) {
        return Err(Error::IndexOutOfRange(format!("Φ[{idx}] over {group}")));
    }
    let mut out = BarChain::zero();
    for_each_g_term(group, idx, |entries, odd| {
        out.add_term(
            BarSymbol(entries),
            GroupRingElement::from_int(group, if odd { -1 } else { 1 }),
        );
    });
    Ok(out)
}

/// Number of bar symbols produced by `G_k(Φ_idx)` before identity symbols are
/// dropped and like terms are merged.
pub fn chain_map_g_raw_count(group: &FiniteAbelianGroup, idx: &KoszulIndex) -> Result<usize> {
    if !idx.fits(group) {
        return Err(Error::IndexOutOfRange(format!("Φ[{idx}] over {group}")));
    }
    let mut n = 0usize;
    for_each_g_term(group, idx, |_, _| n += 1);
    Ok(n)
}

/// `G` extended `ZG`-linearly to Koszul chains.
pub fn chain_map_g_chain(group: &FiniteAbelianGroup, chain: &KoszulChain) -> Result<BarChain> {
    let mut out = BarChain::zero();
    for (idx, c) in chain.terms() {
        out.add_assign(&chain_map_g(group, idx)?.scale_left(c, group));
    }
    Ok(out)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::resolution::bar::bar_diff;
    use crate::resolution::koszul::koszul_diff_chain;

    fn grp(m: &[u64]) -> FiniteAbelianGroup {
        FiniteAbelianGroup::new(m.to_vec()).unwrap()
    }

    fn el(g: &FiniteAbelianGroup, e: &[u64]) -> GroupElement {
        g.element(e.to_vec()).unwrap()
    }

    fn idx(s: &str) -> KoszulIndex {
        s.parse().unwrap()
    }

    #[test]
    fn xi_small_cases() {
        let z2 = grp(&[2]);
        let g = el(&z2, &[1]);
        let one = GroupRingElement::one(&z2);
        // [a,a] with α_{a,1} = 1: (g_1)_1 = 1
        assert_eq!(xi(&z2, 0, 1, 1, &[g.clone()]).unwrap(), one);
        assert_eq!(xi(&z2, 0, 1, 2, &[g.clone(), g.clone()]).unwrap(), one);
        assert!(xi(&z2, 0, 1, 1, &[z2.identity()]).unwrap().is_zero());
        assert!(xi(&z2, 0, 2, 1, &[g.clone(), g.clone()]).is_err());
        assert!(xi(&z2, 1, 1, 1, &[g]).is_err());

        let z2z4 = grp(&[2, 4]);
        let x = el(&z2z4, &[1, 3]);
        // prefix g_1^1 times (g_2)_3
        let expect = GroupRingElement::geometric(&z2z4, 1, 3).shift(&z2z4, &el(&z2z4, &[1, 0]));
        assert_eq!(xi(&z2z4, 1, 1, 1, &[x]).unwrap(), expect);
    }

    #[test]
    fn eta_small_cases() {
        let z4 = grp(&[4]);
        let a = [el(&z4, &[3]), el(&z4, &[2]), el(&z4, &[1])];
        assert_eq!(eta(&z4, 0, 2, 2, &a).unwrap(), 2);
        // rows 1..2: carry(α_2 + α_1) = carry(2 + 3) = 1
        assert_eq!(eta(&z4, 0, 1, 2, &a).unwrap(), 1);
        // rows 1..3: carry(α_3 + α_2) · α_1 = 0 · 3
        assert_eq!(eta(&z4, 0, 1, 3, &a).unwrap(), 0);
        assert_eq!(eta(&z4, 0, 1, 1, &[z4.identity()]).unwrap(), 0);
    }

    #[test]
    fn f_small_examples() {
        let z2 = grp(&[2]);
        let g = el(&z2, &[1]);
        assert_eq!(
            chain_map_f(&z2, &[g.clone()]).unwrap(),
            KoszulChain::generator(&z2, idx("1"))
        );
        assert!(chain_map_f(&z2, &[z2.identity()]).unwrap().is_zero());
        assert_eq!(
            chain_map_f(&z2, &[g.clone(), g]).unwrap(),
            KoszulChain::generator(&z2, idx("1^2"))
        );
    }

    #[test]
    fn f_vanishes_on_degenerate_symbols() {
        let g = grp(&[2, 4]);
        let elems: Vec<GroupElement> = g.elements().collect();
        for k in 1..=3usize {
            for slot in 0..k {
                for a in &elems {
                    for b in &elems {
                        let mut alpha = vec![a.clone(); k];
                        if k > 1 {
                            alpha[(slot + 1) % k] = b.clone();
                        }
                        alpha[slot] = g.identity();
                        assert!(chain_map_f(&g, &alpha).unwrap().is_zero(), "{alpha:?}");
                    }
                }
            }
        }
    }

    // The displayed low-degree formulas, written out term by term.
    struct Disp<'a> {
        g: &'a FiniteAbelianGroup,
    }

    impl Disp<'_> {
        /// `g_1^{x_1} ... g_{s-1}^{x_{s-1}}` for a 1-based position `s`.
        fn pre(&self, x: &[u64], s: usize) -> GroupRingElement {
            let mut e = vec![0; self.g.rank()];
            for j in 0..s - 1 {
                e[j] = x[j] % self.g.modulus(j);
            }
            GroupRingElement::from_element(self.g.element(e).unwrap())
        }

        fn geo(&self, s: usize, c: u64) -> GroupRingElement {
            GroupRingElement::geometric(self.g, s - 1, c)
        }

        fn c(&self, s: usize, x: u64, y: u64) -> BigInt {
            BigInt::from((x + y) / self.g.modulus(s - 1))
        }

        fn prod(&self, parts: &[GroupRingElement]) -> GroupRingElement {
            parts
                .iter()
                .fold(GroupRingElement::one(self.g), |acc, p| acc.mul(p, self.g))
        }
    }

    fn add(v: &[u64], w: &[u64]) -> Vec<u64> {
        v.iter().zip(w).map(|(a, b)| a + b).collect()
    }

    fn key(pairs: &[(usize, u32)]) -> KoszulIndex {
        KoszulIndex::new(pairs.iter().map(|&(r, l)| (r - 1, l)).collect()).unwrap()
    }

    fn display_f1(d: &Disp, i: &[u64]) -> KoszulChain {
        let n = d.g.rank();
        let mut out = KoszulChain::zero();
        for s in 1..=n {
            out.add_term(key(&[(s, 1)]), d.pre(i, s).mul(&d.geo(s, i[s - 1]), d.g));
        }
        out
    }

    fn display_f2(d: &Disp, i: &[u64], j: &[u64]) -> KoszulChain {
        let n = d.g.rank();
        let ij = add(i, j);
        let mut out = KoszulChain::zero();
        for s in 1..=n {
            out.add_term(key(&[(s, 2)]), d.pre(&ij, s).scale(&d.c(s, i[s - 1], j[s - 1])));
        }
        for s in 1..=n {
            for t in s + 1..=n {
                let term = d.prod(&[d.pre(i, t), d.pre(j, s), d.geo(s, j[s - 1]), d.geo(t, i[t - 1])]);
                out.add_term(key(&[(s, 1), (t, 1)]), term.neg());
            }
        }
        out
    }

    fn display_f3(d: &Disp, i: &[u64], j: &[u64], k: &[u64]) -> KoszulChain {
        let n = d.g.rank();
        let jk = add(j, k);
        let ij = add(i, j);
        let mut out = KoszulChain::zero();
        for r in 1..=n {
            let t = d.prod(&[d.pre(&jk, r), d.pre(i, r), d.geo(r, i[r - 1])]);
            out.add_term(key(&[(r, 3)]), t.scale(&d.c(r, j[r - 1], k[r - 1])));
        }
        for r in 1..=n {
            for t in r + 1..=n {
                let a = d.prod(&[d.pre(&jk, r), d.pre(i, t), d.geo(t, i[t - 1])]);
                out.add_term(key(&[(r, 2), (t, 1)]), a.scale(&d.c(r, j[r - 1], k[r - 1])));
                let b = d.prod(&[d.pre(&ij, t), d.pre(k, r), d.geo(r, k[r - 1])]);
                out.add_term(key(&[(r, 1), (t, 2)]), b.scale(&d.c(t, i[t - 1], j[t - 1])));
            }
        }
        for r in 1..=n {
            for s in r + 1..=n {
                for t in s + 1..=n {
                    let a = d.prod(&[
                        d.pre(i, t),
                        d.geo(t, i[t - 1]),
                        d.pre(j, s),
                        d.geo(s, j[s - 1]),
                        d.pre(k, r),
                        d.geo(r, k[r - 1]),
                    ]);
                    out.add_term(key(&[(r, 1), (s, 1), (t, 1)]), a.neg());
                }
            }
        }
        out
    }

    fn display_f4(d: &Disp, i: &[u64], j: &[u64], k: &[u64], l: &[u64]) -> KoszulChain {
        let n = d.g.rank();
        let all = add(&add(i, j), &add(k, l));
        let kl = add(k, l);
        let ij = add(i, j);
        let jk = add(j, k);
        let mut out = KoszulChain::zero();
        for r in 1..=n {
            let c = d.c(r, k[r - 1], l[r - 1]) * d.c(r, i[r - 1], j[r - 1]);
            out.add_term(key(&[(r, 4)]), d.pre(&all, r).scale(&c));
        }
        for r in 1..=n {
            for s in r + 1..=n {
                let c = d.c(r, k[r - 1], l[r - 1]) * d.c(s, i[s - 1], j[s - 1]);
                out.add_term(key(&[(r, 2), (s, 2)]), d.prod(&[d.pre(&kl, r), d.pre(&ij, s)]).scale(&c));

                let t = d.prod(&[d.pre(&jk, s), d.pre(l, r), d.geo(r, l[r - 1]), d.pre(i, s), d.geo(s, i[s - 1])]);
                out.add_term(key(&[(r, 1), (s, 3)]), t.scale(&-d.c(s, j[s - 1], k[s - 1])));

                let t = d.prod(&[d.pre(&kl, r), d.pre(j, r), d.geo(r, j[r - 1]), d.pre(i, s), d.geo(s, i[s - 1])]);
                out.add_term(key(&[(r, 3), (s, 1)]), t.scale(&-d.c(r, k[r - 1], l[r - 1])));
            }
        }
        for r in 1..=n {
            for s in r + 1..=n {
                for t in s + 1..=n {
                    let a = d.prod(&[d.pre(&kl, r), d.pre(j, s), d.geo(s, j[s - 1]), d.pre(i, t), d.geo(t, i[t - 1])]);
                    out.add_term(key(&[(r, 2), (s, 1), (t, 1)]), a.scale(&-d.c(r, k[r - 1], l[r - 1])));

                    let b = d.prod(&[d.pre(&jk, s), d.pre(l, r), d.geo(r, l[r - 1]), d.pre(i, t), d.geo(t, i[t - 1])]);
                    out.add_term(key(&[(r, 1), (s, 2), (t, 1)]), b.scale(&-d.c(s, j[s - 1], k[s - 1])));

                    let c = d.prod(&[d.pre(&ij, t), d.pre(l, r), d.geo(r, l[r - 1]), d.pre(k, s), d.geo(s, k[s - 1])]);
                    out.add_term(key(&[(r, 1), (s, 1), (t, 2)]), c.scale(&-d.c(t, i[t - 1], j[t - 1])));
                }
            }
        }
        for r in 1..=n {
            for s in r + 1..=n {
                for t in s + 1..=n {
                    for u in t + 1..=n {
                        let a = d.prod(&[
                            d.pre(l, r),
                            d.geo(r, l[r - 1]),
                            d.pre(k, s),
                            d.geo(s, k[s - 1]),
                            d.pre(j, t),
                            d.geo(t, j[t - 1]),
                            d.pre(i, u),
                            d.geo(u, i[u - 1]),
                        ]);
                        out.add_term(key(&[(r, 1), (s, 1), (t, 1), (u, 1)]), a);
                    }
                }
            }
        }
        out
    }

    fn exps(g: &FiniteAbelianGroup, idx: usize) -> Vec<u64> {
        g.element_at(idx).exps().to_vec()
    }

    #[test]
    fn general_formula_matches_low_degree_displays() {
        for m in [vec![2], vec![4], vec![2, 2], vec![2, 4], vec![2, 2, 2]] {
            let g = grp(&m);
            let d = Disp { g: &g };
            let ord = g.order_usize();
            let e = |v: &[u64]| g.element(v.to_vec()).unwrap();
            for a in 0..ord {
                let i = exps(&g, a);
                assert_eq!(chain_map_f(&g, &[e(&i)]).unwrap(), display_f1(&d, &i));
                for b in 0..ord {
                    let j = exps(&g, b);
                    assert_eq!(chain_map_f(&g, &[e(&i), e(&j)]).unwrap(), display_f2(&d, &i, &j));
                    for c in 0..ord {
                        let k = exps(&g, c);
                        assert_eq!(
                            chain_map_f(&g, &[e(&i), e(&j), e(&k)]).unwrap(),
                            display_f3(&d, &i, &j, &k),
                            "F3 on {i:?} {j:?} {k:?} over {g}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn general_formula_matches_degree_four_display() {
        for m in [vec![2, 2, 2, 2], vec![3], vec![2, 4]] {
            let g = grp(&m);
            let d = Disp { g: &g };
            let ord = g.order_usize();
            let e = |v: &[u64]| g.element(v.to_vec()).unwrap();
            // a deterministic sample of quadruples, plus every quadruple when small
            let step = if ord.pow(4) > 5000 { 7 } else { 1 };
            for q in (0..ord.pow(4)).step_by(step) {
                let (a, b, c, x) = (q % ord, (q / ord) % ord, (q / ord / ord) % ord, q / ord / ord / ord);
                let (i, j, k, l) = (exps(&g, a), exps(&g, b), exps(&g, c), exps(&g, x));
                assert_eq!(
                    chain_map_f(&g, &[e(&i), e(&j), e(&k), e(&l)]).unwrap(),
                    display_f4(&d, &i, &j, &k, &l),
                    "F4 on {i:?} {j:?} {k:?} {l:?} over {g}"
                );
            }
        }
    }

    #[test]
    fn g_small_examples() {
        let z2 = grp(&[2]);
        let g = z2.generator(0);
        assert_eq!(
            chain_map_g(&z2, &idx("1")).unwrap(),
            BarChain::generator(&z2, BarSymbol(vec![g.clone()]))
        );
        assert_eq!(
            chain_map_g(&z2, &idx("1^2")).unwrap(),
            BarChain::generator(&z2, BarSymbol(vec![g.clone(), g.clone()]))
        );
        let z2z2 = grp(&[2, 2]);
        let (a, b) = (z2z2.generator(0), z2z2.generator(1));
        let mut expect = BarChain::generator(&z2z2, BarSymbol(vec![a.clone(), b.clone()]));
        expect.add_term(BarSymbol(vec![b, a]), GroupRingElement::from_int(&z2z2, -1));
        assert_eq!(chain_map_g(&z2z2, &idx("1 2")).unwrap(), expect);
    }

    #[test]
    fn g_raw_term_count() {
        fn binom_multi(sizes: &[usize]) -> usize {
            let mut total = 0usize;
            let mut acc = 1usize;
            for &s in sizes {
                for i in 1..=s {
                    total += 1;
                    acc = acc * total / i;
                }
            }
            acc
        }
        for m in [vec![3], vec![2, 4], vec![2, 2, 2]] {
            let g = grp(&m);
            for k in 1..=5 {
                for i in KoszulIndex::all(g.rank(), k) {
                    let sizes: Vec<usize> = i.pairs().iter().map(|&(_, l)| l as usize).collect();
                    let expand: usize = i
                        .pairs()
                        .iter()
                        .map(|&(r, l)| (g.modulus(r) as usize).pow(l / 2))
                        .product();
                    assert_eq!(chain_map_g_raw_count(&g, &i).unwrap(), binom_multi(&sizes) * expand);
                }
            }
        }
    }

    #[test]
    fn degree_one_commutes() {
        let g = grp(&[3, 3]);
        for x in g.nonidentity_elements() {
            let sym = BarSymbol(vec![x.clone()]);
            let lhs = chain_map_f_chain(&g, &bar_diff(&g, &sym)).unwrap();
            let rhs = koszul_diff_chain(&g, &chain_map_f(&g, &[x]).unwrap());
            assert_eq!(lhs, rhs);
        }
    }
}
