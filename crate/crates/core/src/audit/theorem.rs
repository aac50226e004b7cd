use std::fmt;
use std::str::FromStr;

use serde::Serialize;

/// The inequalities and equalities the audit knows how to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TheoremId {
    /// `L^ℓ_k(G) >= kn / (Δ(Δ-k+1) + k)`.
    LlpLower,
    /// `L_2(G) + L_2(Ḡ) <= n + 2`.
    NgL2,
    /// `ρ(G) >= (n + s(Δ² - Δ)) / (1 + Δ²)`.
    RhoSupportLower,
    /// `ρ(G) >= (n + Δ(Δ - δ)) / (Δ² + 1)` (Gagarin and Zverovich).
    RhoGzLower,
    /// `ρ_L(G) >= n / (Δ² + 1)` (Henning).
    RholHenning,
    /// `ρ(G) <= (n - ℓ + δ's) / (1 + δ')`.
    RhoUpper,
    /// `γ(T) <= (n - ℓ + 2s) / 3` for trees.
    TreeGammaUpper,
    /// `ρ^o(G) <= (n + (δ' - 1)s) / δ'`.
    RhooUpper,
    /// `γ_t(T) <= (n + s) / 2` for trees (Chellali and Haynes).
    TreeGammatUpper,
    /// `γ(T) = ρ(T)` for trees (Meir and Moon).
    MeirMoonEq,
    /// `γ_t(T) = ρ^o(T)` for trees (Rall).
    RallEq,
    /// `L_2(G) >= n / 3` for cubic graphs (Balister et al.).
    CubicL2Balister,
}

impl TheoremId {
    pub const ALL: [TheoremId; 12] = [
        TheoremId::LlpLower,
        TheoremId::NgL2,
        TheoremId::RhoSupportLower,
        TheoremId::RhoGzLower,
        TheoremId::RholHenning,
        TheoremId::RhoUpper,
        TheoremId::TreeGammaUpper,
        TheoremId::RhooUpper,
        TheoremId::TreeGammatUpper,
        TheoremId::MeirMoonEq,
        TheoremId::RallEq,
        TheoremId::CubicL2Balister,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            TheoremId::LlpLower => "LLP_LOWER",
            TheoremId::NgL2 => "NG_L2",
            TheoremId::RhoSupportLower => "RHO_SUPPORT_LOWER",
            TheoremId::RhoGzLower => "RHO_GZ_LOWER",
            TheoremId::RholHenning => "RHOL_HENNING",
            TheoremId::RhoUpper => "RHO_UPPER",
            TheoremId::TreeGammaUpper => "TREE_GAMMA_UPPER",
            TheoremId::RhooUpper => "RHOO_UPPER",
            TheoremId::TreeGammatUpper => "TREE_GAMMAT_UPPER",
            TheoremId::MeirMoonEq => "MEIR_MOON_EQ",
            TheoremId::RallEq => "RALL_EQ",
            TheoremId::CubicL2Balister => "CUBIC_L2_BALISTER",
        }
    }

    /// Human-readable statement, `lhs relation rhs`.
    pub fn statement(&self) -> &'static str {
        match self {
            TheoremId::LlpLower => "L^l_k(G) >= kn/(D(D-k+1)+k)",
            TheoremId::NgL2 => "L_2(G) + L_2(co-G) <= n+2",
            TheoremId::RhoSupportLower => "rho(G) >= (n+s(D^2-D))/(1+D^2)",
            TheoremId::RhoGzLower => "rho(G) >= (n+D(D-d))/(D^2+1)",
            TheoremId::RholHenning => "rho_L(G) >= n/(D^2+1)",
            TheoremId::RhoUpper => "rho(G) <= (n-l+d's)/(1+d')",
            TheoremId::TreeGammaUpper => "gamma(T) <= (n-l+2s)/3",
            TheoremId::RhooUpper => "rho^o(G) <= (n+(d'-1)s)/d'",
            TheoremId::TreeGammatUpper => "gamma_t(T) <= (n+s)/2",
            TheoremId::MeirMoonEq => "gamma(T) = rho(T)",
            TheoremId::RallEq => "gamma_t(T) = rho^o(T)",
            TheoremId::CubicL2Balister => "L_2(G) >= n/3",
        }
    }

    pub fn relation(&self) -> Relation {
        match self {
            TheoremId::LlpLower
            | TheoremId::RhoSupportLower
            | TheoremId::RhoGzLower
            | TheoremId::RholHenning
            | TheoremId::CubicL2Balister => Relation::Ge,
            TheoremId::NgL2
            | TheoremId::RhoUpper
            | TheoremId::TreeGammaUpper
            | TheoremId::RhooUpper
            | TheoremId::TreeGammatUpper => Relation::Le,
            TheoremId::MeirMoonEq | TheoremId::RallEq => Relation::Eq,
        }
    }

    /// Whether the bound is parameterized by `k`.
    pub fn takes_k(&self) -> bool {
        *self == TheoremId::LlpLower
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown theorem id {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Ge,
    Le,
    Eq,
}

impl Relation {
    pub fn symbol(&self) -> &'static str {
        match self {
            Relation::Ge => ">=",
            Relation::Le => "<=",
            Relation::Eq => "=",
        }
    }

    pub fn holds<T: PartialOrd>(&self, lhs: &T, rhs: &T) -> bool {
        match self {
            Relation::Ge => lhs >= rhs,
            Relation::Le => lhs <= rhs,
            Relation::Eq => lhs == rhs,
        }
    }
}

impl Serialize for Relation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.symbol())
    }
}
