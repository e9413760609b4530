//! Log unit classes on the line with boundary `{0, 1, ∞}`: rational
//! functions with zeros and poles only on the boundary, modulo constants.
//! Every class is `t^a (t−1)^b` up to a constant, so the group is the
//! lattice ℤ² with the boundary orders `(a, b, −a−b)`.

/// The class of `c · t^{exp_t} · (t−1)^{exp_t_minus_1}` modulo constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LogUnitClass {
    pub exp_t: i64,
    pub exp_t_minus_1: i64,
}

impl LogUnitClass {
    pub fn new(exp_t: i64, exp_t_minus_1: i64) -> Self {
        LogUnitClass { exp_t, exp_t_minus_1 }
    }

    /// Orders of vanishing at `0`, `1` and `∞`; they sum to zero.
    pub fn boundary_orders(&self) -> (i64, i64, i64) {
        (self.exp_t, self.exp_t_minus_1, -self.exp_t - self.exp_t_minus_1)
    }

    pub fn add(&self, other: &LogUnitClass) -> LogUnitClass {
        LogUnitClass::new(self.exp_t + other.exp_t, self.exp_t_minus_1 + other.exp_t_minus_1)
    }

    pub fn neg(&self) -> LogUnitClass {
        LogUnitClass::new(-self.exp_t, -self.exp_t_minus_1)
    }

    pub fn scale(&self, k: i64) -> LogUnitClass {
        LogUnitClass::new(k * self.exp_t, k * self.exp_t_minus_1)
    }
}

/// The rank-2 lattice of log unit classes with its distinguished basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogUnitLattice {
    pub class_t: LogUnitClass,
    pub class_t_minus_1: LogUnitClass,
}

impl LogUnitLattice {
    pub fn rank(&self) -> usize {
        2
    }

    /// The class `i·[t] + j·[t−1]` — the image of the basis pair under the
    /// exponent map `(u, v) ↦ u^i v^j`.
    pub fn power_map(&self, i: i64, j: i64) -> LogUnitClass {
        self.class_t.scale(i).add(&self.class_t_minus_1.scale(j))
    }
}

/// The group of log units modulo constants.
pub fn log_unit_classes() -> LogUnitLattice {
    LogUnitLattice {
        class_t: LogUnitClass::new(1, 0),
        class_t_minus_1: LogUnitClass::new(0, 1),
    }
}

/// Is the class a `p`-th power? Constants are always `p`-th powers (the
/// Frobenius is onto every finite field of characteristic `p`), so the
/// test is divisibility of both exponents.
pub fn pth_power_test(c: &LogUnitClass, p: u32) -> bool {
    let p = p as i64;
    c.exp_t % p == 0 && c.exp_t_minus_1 % p == 0
}
