use crate::gf2n::{Fe, FieldCtx};

/// Exp/log tables over the generator of a small field.
pub(crate) struct LogTables {
    order: usize,
    // exp has length 2 * order so sums of two logs need no reduction
    exp: Vec<Fe>,
    log: Vec<u32>,
}

impl LogTables {
    pub(crate) fn new(ctx: &FieldCtx) -> Self {
        let order = ctx.order() as usize;
        let g = ctx.generator();
        let mut exp = Vec::with_capacity(2 * order);
        let mut log = vec![0u32; order + 1];
        let mut x = Fe::ONE;
        for i in 0..2 * order {
            if i < order {
                log[x.bits() as usize] = i as u32;
            }
            exp.push(x);
            x = ctx.mul(x, g);
        }
        LogTables { order, exp, log }
    }

    #[inline]
    pub(crate) fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.is_zero() || b.is_zero() {
            return Fe::ZERO;
        }
        self.exp[self.log[a.bits() as usize] as usize + self.log[b.bits() as usize] as usize]
    }

    /// `x^e` for every `x`, indexed by the bits of `x`; `e >= 1`.
    pub(crate) fn power_table(&self, e: u64) -> Vec<Fe> {
        let m = self.order as u64;
        let mut out = vec![Fe::ZERO; self.order + 1];
        for (i, &x) in self.exp[..self.order].iter().enumerate() {
            out[x.bits() as usize] = self.exp[((i as u64 * (e % m)) % m) as usize];
        }
        out
    }
}

/// Fiber counter reused across candidates.
///
/// Rejects as soon as a fiber reaches 3 or the image outgrows `q / 2`.
pub(crate) struct FiberCounter {
    counts: Vec<u8>,
    touched: Vec<u32>,
}

impl FiberCounter {
    pub(crate) fn new(q: usize) -> Self {
        FiberCounter { counts: vec![0; q], touched: Vec::with_capacity(q / 2 + 1) }
    }

    /// `values` must yield the image of every field element exactly once.
    pub(crate) fn two_to_one(&mut self, values: impl Iterator<Item = Fe>) -> bool {
        let half = self.counts.len() / 2;
        let mut ok = true;
        for v in values {
            let c = &mut self.counts[v.bits() as usize];
            match *c {
                0 => {
                    if self.touched.len() == half {
                        ok = false;
                        break;
                    }
                    self.touched.push(v.bits());
                }
                2 => {
                    ok = false;
                    break;
                }
                _ => {}
            }
            *c += 1;
        }
        for &t in &self.touched {
            self.counts[t as usize] = 0;
        }
        let image = self.touched.len();
        self.touched.clear();
        ok && image == half
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2n::make_field;
    use crate::polyring::SparsePoly;
    use crate::two2one::is_two_to_one;

    #[test]
    fn tables_agree_with_field() {
        for n in 2..=7 {
            let ctx = make_field(n, None).unwrap();
            let t = LogTables::new(&ctx);
            for a in ctx.elements() {
                for b in ctx.elements() {
                    assert_eq!(t.mul(a, b), ctx.mul(a, b));
                }
            }
            for e in [1, 3, 5, ctx.order(), ctx.order() + 2] {
                let p = t.power_table(e);
                for x in ctx.elements() {
                    assert_eq!(p[x.bits() as usize], ctx.pow(x, e), "x={x} e={e}");
                }
            }
        }
    }

    #[test]
    fn counter_matches_histogram() {
        let ctx = make_field(5, None).unwrap();
        let mut counter = FiberCounter::new(ctx.size() as usize);
        for k in 2..31u64 {
            for l in 1..k {
                let f = SparsePoly::from_exponents(&[k, l]);
                let table = f.eval_table(&ctx);
                assert_eq!(counter.two_to_one(table.iter().copied()), is_two_to_one(&ctx, &f).unwrap());
            }
        }
    }
}
