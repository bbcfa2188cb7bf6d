use super::{
    CatalogEntry, ClosedFormSpec, Coef, Cond, ConstKind, Factor, IndexExpr, PDomain, Params, Seq, SignMode, Summation,
    Term, Upper,
};
use std::sync::OnceLock;

use Seq::{F, L};

// Index patterns.
const B: IndexExpr = IndexExpr::nk(1).jnq(1);
const B_1: IndexExpr = IndexExpr::nk(1).jnq(1).one(1);
const B_2: IndexExpr = IndexExpr::nk(1).jnq(1).one(2);
const BP: IndexExpr = IndexExpr::nk(1).jnq(1).np(1);
const B2: IndexExpr = IndexExpr::nk(1).jnq(2);
const H: IndexExpr = IndexExpr::nk(2).jnq(2);
const NK_MNQ: IndexExpr = IndexExpr::nk(1).mnq(1);
const TWO_NK_MNQ: IndexExpr = IndexExpr::nk(2).mnq(1);
const MNQ: IndexExpr = IndexExpr::konst().mnq(1);
const TWO_MNQ: IndexExpr = IndexExpr::konst().mnq(2);
const NP: IndexExpr = IndexExpr::konst().np(1);

// Ranges of j as ((a_lo, c_lo), (a_hi, c_hi)) meaning a·m + c.
type R = ((i64, i64), (i64, i64));
const J0_M: R = ((0, 0), (1, 0));
const J0_M1: R = ((0, 0), (1, -1));
const J1_M1: R = ((0, 1), (1, -1));
const JM1_2M: R = ((1, 1), (2, 0));
const JM1_2M1: R = ((1, 1), (2, -1));
const J0_2M: R = ((0, 0), (2, 0));
const J0_2M1: R = ((0, 0), (2, -1));

const NONE: SignMode = SignMode::None;
const ALT: SignMode = SignMode::AltK;
const ALT1: SignMode = SignMode::AltKPlusOne;
const ALTNK: SignMode = SignMode::AltNK;

fn pr(seq: Seq, ix: IndexExpr, r: R) -> Factor {
    Factor::prod(seq, ix, r.0, r.1)
}

fn one(seq: Seq, ix: IndexExpr) -> Factor {
    Factor::one(seq, ix)
}

fn t(sign: SignMode, num: Vec<Factor>, den: Vec<Factor>) -> Term {
    Term::new(sign, num, den)
}

/// `num/den / ∏ seq(ix)`.
fn over(num: i64, den: i64, seqs: &[(Seq, IndexExpr)]) -> Coef {
    Coef::new(num, den, seqs.iter().map(|&(s, ix)| (s, ix, -1)).collect())
}

fn tele(sum_coef: Coef, upper: Upper, inner: Term, constant: Option<(Coef, ConstKind)>) -> ClosedFormSpec {
    ClosedFormSpec::Telescoped { sum_coef, upper, inner, constant }
}

fn e(
    id: &'static str,
    family: &'static str,
    label: &'static str,
    cond: Cond,
    term: Term,
    closed: ClosedFormSpec,
) -> CatalogEntry {
    CatalogEntry {
        id,
        family,
        label,
        cond,
        p_domain: PDomain::Zero,
        frozen: None,
        summation: Summation::Ordinary,
        term,
        closed,
        notes: "",
    }
}

trait With {
    fn p(self, d: PDomain) -> Self;
    fn cesaro(self) -> Self;
    fn notes(self, n: &'static str) -> Self;
    fn frozen(self, p: Params) -> Self;
}

impl With for CatalogEntry {
    fn p(mut self, d: PDomain) -> Self {
        self.p_domain = d;
        self
    }
    fn cesaro(mut self) -> Self {
        self.summation = Summation::Cesaro;
        self
    }
    fn notes(mut self, n: &'static str) -> Self {
        self.notes = n;
        self
    }
    fn frozen(mut self, p: Params) -> Self {
        self.frozen = Some(p);
        self
    }
}

const FA: &str = "Fibonacci products F(nk)...F(nk+mnq) in the denominator";
const FB: &str = "Lucas products L(nk)...L(nk+mnq) in the denominator";
const FC: &str = "Fibonacci products F(nk)...F(nk+2mnq) in the denominator";
const FD: &str = "Lucas products L(nk)...L(nk+2mnq) in the denominator";
const FE: &str = "Fibonacci products F(nk)F(nk+2nq)...F(nk+2mnq) in the denominator";
const FG: &str = "Lucas products L(nk)L(nk+2nq)...L(nk+2mnq) in the denominator";
const FH: &str = "Fibonacci products F(2nk)F(2nk+2nq)...F(2nk+2mnq) in the denominator";
const FI: &str = "Lucas products L(2nk)L(2nk+2nq)...L(2nk+2mnq) in the denominator";
const FJ: &str = "squared Fibonacci products in the denominator";
const FK: &str = "squared Lucas products in the denominator";
const FL: &str = "paired Fibonacci products F(nk+jnq)F(nk+jnq+np) in the denominator";
const FM: &str = "paired Lucas products L(nk+jnq)L(nk+jnq+np) in the denominator";
const FN: &str = "squared shifted Fibonacci numerators and fixed sums";

fn family_a() -> Vec<CatalogEntry> {
    let inv2f = || over(1, 2, &[(F, MNQ)]);
    let neg_inv2f = || over(-1, 2, &[(F, MNQ)]);
    let ff_np = |s: i64| over(s, 1, &[(F, MNQ), (F, NP)]);
    vec![
        e(
            "A1",
            "A",
            "sign (-1)^(nk-1), Lucas numerator products, sqrt5^m constant",
            Cond::Any,
            t(ALTNK, vec![pr(L, B, J1_M1)], vec![pr(F, B, J0_M)]),
            tele(
                neg_inv2f(),
                Upper::Q,
                t(NONE, vec![pr(L, B, J0_M1)], vec![pr(F, B, J0_M1)]),
                Some((inv2f(), ConstKind::Sqrt5PowM)),
            ),
        ),
        e(
            "A2",
            "A",
            "Lucas numerator products, n odd and q even",
            Cond::NOddQEven,
            t(NONE, vec![pr(L, B, J1_M1)], vec![pr(F, B, J0_M)]),
            tele(inv2f(), Upper::Q, t(ALT1, vec![pr(L, B, J0_M1)], vec![pr(F, B, J0_M1)]), None),
        ),
        e(
            "A3",
            "A",
            "reciprocal of F(nk)...F(nk+2mnq) skipping F(nk+mnq), all odd",
            Cond::AllOdd,
            t(NONE, vec![], vec![pr(F, B, J0_M1), pr(F, B, JM1_2M)]),
            tele(over(1, 1, &[(L, MNQ)]), Upper::Q, t(NONE, vec![], vec![pr(F, B, J0_2M1)]), None),
        ),
        e(
            "A4",
            "A",
            "alternating reciprocal skipping F(nk+mnq), q odd and mn even",
            Cond::QOddMnEven,
            t(ALT, vec![], vec![pr(F, B, J0_M1), pr(F, B, JM1_2M)]),
            tele(over(1, 1, &[(L, MNQ)]), Upper::Q, t(ALT, vec![], vec![pr(F, B, J0_2M1)]), None),
        ),
        e(
            "A5",
            "A",
            "alternating F(2nk+mnq) numerator with Lucas products, q odd",
            Cond::QOdd,
            t(ALT, vec![one(F, TWO_NK_MNQ), pr(L, B, J1_M1)], vec![pr(F, B, J0_M)]),
            tele(over(1, 2, &[]), Upper::Q, t(ALT, vec![pr(L, B, J0_M1)], vec![pr(F, B, J0_M1)]), None),
        )
        .cesaro(),
        e(
            "A5c",
            "A",
            "alternating squared L(nk+mnq) numerator, q odd",
            Cond::QOdd,
            t(
                ALT,
                vec![one(L, NK_MNQ).pow(2), pr(L, B, J1_M1), pr(L, B, JM1_2M1)],
                vec![pr(F, B, J0_M1), pr(F, B, JM1_2M)],
            ),
            tele(over(1, 2, &[]), Upper::Q, t(ALT, vec![pr(L, B, J0_2M1)], vec![pr(F, B, J0_2M1)]), None),
        )
        .cesaro()
        .notes("A5 with m replaced by 2m, after cancelling F(nk+mnq)"),
        e(
            "A6",
            "A",
            "sign (-1)^(nk-1), shifted Fibonacci numerators, phi^(mnp) constant",
            Cond::Any,
            t(ALTNK, vec![pr(F, BP, J1_M1)], vec![pr(F, B, J0_M)]),
            tele(
                ff_np(-1),
                Upper::Q,
                t(NONE, vec![pr(F, BP, J0_M1)], vec![pr(F, B, J0_M1)]),
                Some((ff_np(1), ConstKind::PhiPowMNP)),
            ),
        )
        .p(PDomain::Positive)
        .notes("at m=1, p=1 its closed form equals that of A1 at m=1"),
        e(
            "A7",
            "A",
            "shifted Fibonacci numerators, n odd and q even",
            Cond::NOddQEven,
            t(NONE, vec![pr(F, BP, J1_M1)], vec![pr(F, B, J0_M)]),
            tele(ff_np(1), Upper::Q, t(ALT1, vec![pr(F, BP, J0_M1)], vec![pr(F, B, J0_M1)]), None),
        )
        .p(PDomain::Positive),
    ]
}

fn family_b() -> Vec<CatalogEntry> {
    let inv2f = |s: i64| over(s, 2, &[(F, MNQ)]);
    let ff5 = |s: i64| over(s, 5, &[(F, MNQ), (F, NP)]);
    vec![
        e(
            "B1",
            "B",
            "sign (-1)^(nk-1), Fibonacci numerator products, sqrt5^(-m) constant",
            Cond::Any,
            t(ALTNK, vec![pr(F, B, J1_M1)], vec![pr(L, B, J0_M)]),
            tele(
                inv2f(1),
                Upper::Q,
                t(NONE, vec![pr(F, B, J0_M1)], vec![pr(L, B, J0_M1)]),
                Some((inv2f(-1), ConstKind::InvSqrt5PowM)),
            ),
        ),
        e(
            "B2",
            "B",
            "Fibonacci numerator products, n odd and q even",
            Cond::NOddQEven,
            t(NONE, vec![pr(F, B, J1_M1)], vec![pr(L, B, J0_M)]),
            tele(inv2f(1), Upper::Q, t(ALT, vec![pr(F, B, J0_M1)], vec![pr(L, B, J0_M1)]), None),
        ),
        e(
            "B3",
            "B",
            "reciprocal of L(nk)...L(nk+2mnq) skipping L(nk+mnq), all odd",
            Cond::AllOdd,
            t(NONE, vec![], vec![pr(L, B, J0_M1), pr(L, B, JM1_2M)]),
            tele(over(1, 1, &[(L, MNQ)]), Upper::Q, t(NONE, vec![], vec![pr(L, B, J0_2M1)]), None),
        ),
        e(
            "B4",
            "B",
            "alternating reciprocal skipping L(nk+mnq), q odd and mn even",
            Cond::QOddMnEven,
            t(ALT, vec![], vec![pr(L, B, J0_M1), pr(L, B, JM1_2M)]),
            tele(over(1, 1, &[(L, MNQ)]), Upper::Q, t(ALT, vec![], vec![pr(L, B, J0_2M1)]), None),
        ),
        e(
            "B5",
            "B",
            "alternating F(2nk+mnq) numerator with Fibonacci products, q odd",
            Cond::QOdd,
            t(ALT, vec![one(F, TWO_NK_MNQ), pr(F, B, J1_M1)], vec![pr(L, B, J0_M)]),
            tele(over(1, 2, &[]), Upper::Q, t(ALT, vec![pr(F, B, J0_M1)], vec![pr(L, B, J0_M1)]), None),
        )
        .cesaro(),
        e(
            "B5c",
            "B",
            "alternating squared F(nk+mnq) numerator, q odd",
            Cond::QOdd,
            t(
                ALT,
                vec![one(F, NK_MNQ).pow(2), pr(F, B, J1_M1), pr(F, B, JM1_2M1)],
                vec![pr(L, B, J0_M1), pr(L, B, JM1_2M)],
            ),
            tele(over(1, 2, &[]), Upper::Q, t(ALT, vec![pr(F, B, J0_2M1)], vec![pr(L, B, J0_2M1)]), None),
        )
        .cesaro()
        .notes("B5 with m replaced by 2m, after cancelling L(nk+mnq)"),
        e(
            "B6",
            "B",
            "sign (-1)^(nk-1), shifted Lucas numerators, phi^(mnp) constant",
            Cond::Any,
            t(ALTNK, vec![pr(L, BP, J1_M1)], vec![pr(L, B, J0_M)]),
            tele(
                ff5(1),
                Upper::Q,
                t(NONE, vec![pr(L, BP, J0_M1)], vec![pr(L, B, J0_M1)]),
                Some((ff5(-1), ConstKind::PhiPowMNP)),
            ),
        )
        .p(PDomain::Positive),
        e(
            "B7",
            "B",
            "shifted Lucas numerators, n odd and q even",
            Cond::NOddQEven,
            t(NONE, vec![pr(L, BP, J1_M1)], vec![pr(L, B, J0_M)]),
            tele(ff5(1), Upper::Q, t(ALT, vec![pr(L, BP, J0_M1)], vec![pr(L, B, J0_M1)]), None),
        )
        .p(PDomain::Positive),
    ]
}

fn family_cd() -> Vec<CatalogEntry> {
    vec![
        e(
            "C1",
            "C",
            "L(nk+mnq) over F(nk)...F(nk+2mnq), mnq even",
            Cond::MnqEven,
            t(NONE, vec![one(L, NK_MNQ)], vec![pr(F, B, J0_2M)]),
            tele(over(1, 1, &[(F, MNQ)]), Upper::Q, t(NONE, vec![], vec![pr(F, B, J0_2M1)]), None),
        ),
        e(
            "C2",
            "C",
            "alternating L(nk+mnq) over F(nk)...F(nk+2mnq), q even or mnq odd",
            Cond::QEvenOrMnqOdd,
            t(ALT, vec![one(L, NK_MNQ)], vec![pr(F, B, J0_2M)]),
            tele(over(1, 1, &[(F, MNQ)]), Upper::Q, t(ALT, vec![], vec![pr(F, B, J0_2M1)]), None),
        ),
        e(
            "D1",
            "D",
            "F(nk+mnq) over L(nk)...L(nk+2mnq), mnq even",
            Cond::MnqEven,
            t(NONE, vec![one(F, NK_MNQ)], vec![pr(L, B, J0_2M)]),
            tele(over(1, 5, &[(F, MNQ)]), Upper::Q, t(NONE, vec![], vec![pr(L, B, J0_2M1)]), None),
        ),
        e(
            "D2",
            "D",
            "alternating F(nk+mnq) over L(nk)...L(nk+2mnq), q even or mnq odd",
            Cond::QEvenOrMnqOdd,
            t(ALT, vec![one(F, NK_MNQ)], vec![pr(L, B, J0_2M)]),
            tele(over(1, 5, &[(F, MNQ)]), Upper::Q, t(ALT, vec![], vec![pr(L, B, J0_2M1)]), None),
        ),
    ]
}

/// Families with step-2q products: both sign variants of each theorem.
fn family_eg() -> Vec<CatalogEntry> {
    let mut v = Vec::new();
    #[allow(clippy::type_complexity)]
    let specs: [(&str, &str, &str, &str, Cond, Seq, Seq, i64, Seq); 4] = [
        ("E1", "E1a", "E", "F(nk+mnq) over F(nk)F(nk+2nq)...F(nk+2mnq), all odd", Cond::AllOdd, F, F, 1, L),
        ("E2", "E2a", "E", "L(nk+mnq) over F(nk)F(nk+2nq)...F(nk+2mnq), mnq even", Cond::MnqEven, L, F, 1, F),
        ("G1", "G1a", "G", "L(nk+mnq) over L(nk)L(nk+2nq)...L(nk+2mnq), all odd", Cond::AllOdd, L, L, 1, L),
        ("G2", "G2a", "G", "F(nk+mnq) over L(nk)L(nk+2nq)...L(nk+2mnq), mnq even", Cond::MnqEven, F, L, 5, F),
    ];
    for (plain, alt, fam, label, cond, num, den, five, scale) in specs {
        let alt_label: &'static str = Box::leak(format!("alternating {label}").into_boxed_str());
        for (id, sign, lab) in [(plain, NONE, label), (alt, ALT, alt_label)] {
            let entry = e(
                id,
                fam,
                lab,
                cond,
                t(sign, vec![one(num, NK_MNQ)], vec![pr(den, B2, J0_M)]),
                tele(over(1, five, &[(scale, MNQ)]), Upper::TwoQ, t(sign, vec![], vec![pr(den, B2, J0_M1)]), None),
            );
            v.push(entry);
        }
    }
    v
}

fn family_hi() -> Vec<CatalogEntry> {
    let mut v = Vec::new();
    #[allow(clippy::type_complexity)]
    let specs: [(&str, &str, Cond, SignMode, Seq, Seq, i64, Seq); 8] = [
        ("H1", "F(2nk+mnq) numerator, all odd", Cond::AllOdd, NONE, F, F, 1, L),
        ("H2", "alternating F(2nk+mnq) numerator, q odd and mn even", Cond::QOddMnEven, ALT, F, F, 1, L),
        ("H3", "L(2nk+mnq) numerator, mnq even", Cond::MnqEven, NONE, L, F, 1, F),
        ("H4", "alternating L(2nk+mnq) numerator, q even or mnq odd", Cond::QEvenOrMnqOdd, ALT, L, F, 1, F),
        ("I1", "L(2nk+mnq) numerator, all odd", Cond::AllOdd, NONE, L, L, 1, L),
        ("I2", "alternating L(2nk+mnq) numerator, q odd and mn even", Cond::QOddMnEven, ALT, L, L, 1, L),
        ("I3", "F(2nk+mnq) numerator, mnq even", Cond::MnqEven, NONE, F, L, 5, F),
        ("I4", "alternating F(2nk+mnq) numerator, q even or mnq odd", Cond::QEvenOrMnqOdd, ALT, F, L, 5, F),
    ];
    for (id, label, cond, sign, num, den, five, scale) in specs {
        let fam = &id[..1];
        v.push(e(
            id,
            if fam == "H" { "H" } else { "I" },
            label,
            cond,
            t(sign, vec![one(num, TWO_NK_MNQ)], vec![pr(den, H, J0_M)]),
            tele(over(1, five, &[(scale, MNQ)]), Upper::Q, t(sign, vec![], vec![pr(den, H, J0_M1)]), None),
        ));
    }
    v
}

fn family_jk() -> Vec<CatalogEntry> {
    let mut v = Vec::new();
    // (prefix, seq in the denominator, the other seq, 1 or 5 in the scale)
    for (fam, d, o, five) in [("J", F, L, 1), ("K", L, F, 5)] {
        let id = |s: &str| -> &'static str { Box::leak(format!("{fam}{s}").into_boxed_str()) };
        let sq = |r: R| pr(d, B, r).pow(2);
        let scale = over(1, five, &[(F, MNQ)]);
        let scale2 = over(1, five, &[(F, TWO_MNQ)]);
        let (lab1, lab1c, lab2, lab2c) = if fam == "J" {
            (
                "F(2nk+mnq) over squared Fibonacci products, mnq even",
                "L(nk+mnq) over squared products with F(nk+mnq) unsquared",
                "alternating F(2nk+mnq) over squared Fibonacci products, q even or mnq odd",
                "alternating L(nk+mnq) over squared products with F(nk+mnq) unsquared, q even",
            )
        } else {
            (
                "F(2nk+mnq) over squared Lucas products, mnq even",
                "F(nk+mnq) over squared products with L(nk+mnq) unsquared",
                "alternating F(2nk+mnq) over squared Lucas products, q even or mnq odd",
                "alternating F(nk+mnq) over squared products with L(nk+mnq) unsquared, q even",
            )
        };
        // The corollary numerator is the other sequence at nk+mnq (L for J, F for K).
        let cnum = if fam == "J" { L } else { F };
        for (suffix, sign, cond, label) in [("1", NONE, Cond::MnqEven, lab1), ("2", ALT, Cond::QEvenOrMnqOdd, lab2)] {
            v.push(e(
                id(suffix),
                fam,
                label,
                cond,
                t(sign, vec![one(F, TWO_NK_MNQ)], vec![sq(J0_M)]),
                tele(scale.clone(), Upper::Q, t(sign, vec![], vec![sq(J0_M1)]), None),
            ));
            let (csign, ccond, clabel) =
                if suffix == "1" { (NONE, Cond::Any, lab1c) } else { (ALT, Cond::QEven, lab2c) };
            v.push(
                e(
                    id(&format!("{suffix}c")),
                    fam,
                    clabel,
                    ccond,
                    t(csign, vec![one(cnum, NK_MNQ)], vec![one(d, NK_MNQ), sq(J0_M1), sq(JM1_2M)]),
                    tele(scale2.clone(), Upper::Q, t(csign, vec![], vec![sq(J0_2M1)]), None),
                )
                .notes(if suffix == "1" {
                    "the m -> 2m case of the mnq-even theorem, valid for all m, n, q"
                } else {
                    "the m -> 2m case of the alternating theorem, restricted to even q"
                }),
            );
        }
        let (k3_coef, k3_const, k3_kind) = if fam == "J" {
            (over(-1, 4, &[(F, MNQ)]), over(1, 4, &[(F, MNQ)]), ConstKind::FivePowM)
        } else {
            (over(1, 4, &[(F, MNQ)]), over(-1, 4, &[(F, MNQ)]), ConstKind::InvFivePowM)
        };
        let osq = |r: R| pr(o, B, r).pow(2);
        v.push(e(
            id("3"),
            fam,
            if fam == "J" {
                "sign (-1)^(nk-1), squared Lucas numerators, 5^m constant"
            } else {
                "sign (-1)^(nk-1), squared Fibonacci numerators, 5^(-m) constant"
            },
            Cond::Any,
            t(ALTNK, vec![one(F, TWO_NK_MNQ), osq(J1_M1)], vec![sq(J0_M)]),
            tele(k3_coef, Upper::Q, t(NONE, vec![osq(J0_M1)], vec![sq(J0_M1)]), Some((k3_const, k3_kind))),
        ));
        v.push(e(
            id("4"),
            fam,
            if fam == "J" {
                "squared Lucas numerators, n odd and q even"
            } else {
                "squared Fibonacci numerators, n odd and q even"
            },
            Cond::NOddQEven,
            t(NONE, vec![one(F, TWO_NK_MNQ), osq(J1_M1)], vec![sq(J0_M)]),
            tele(
                over(1, 4, &[(F, MNQ)]),
                Upper::Q,
                t(if fam == "J" { ALT1 } else { ALT }, vec![osq(J0_M1)], vec![sq(J0_M1)]),
                None,
            ),
        ));
    }
    v
}

fn family_lm() -> Vec<CatalogEntry> {
    let mut v = Vec::new();
    for (fam, d, five) in [("L", F, 1), ("M", L, 5)] {
        for (suffix, sign, cond) in [("1", NONE, Cond::MnqEven), ("2", ALT, Cond::QEvenOrMnqOdd)] {
            let id: &'static str = Box::leak(format!("{fam}{suffix}").into_boxed_str());
            let label = match (fam, suffix) {
                ("L", "1") => "F(2nk+mnq+np) over paired Fibonacci products, mnq even",
                ("L", _) => "alternating F(2nk+mnq+np) over paired Fibonacci products, q even or mnq odd",
                ("M", "1") => "F(2nk+mnq+np) over paired Lucas products, mnq even",
                _ => "alternating F(2nk+mnq+np) over paired Lucas products, q even or mnq odd",
            };
            v.push(
                e(
                    id,
                    fam,
                    label,
                    cond,
                    t(sign, vec![one(F, TWO_NK_MNQ.np(1))], vec![pr(d, B, J0_M), pr(d, BP, J0_M)]),
                    tele(
                        over(1, five, &[(F, MNQ)]),
                        Upper::Q,
                        t(sign, vec![], vec![pr(d, B, J0_M1), pr(d, BP, J0_M1)]),
                        None,
                    ),
                )
                .p(PDomain::NonNegative),
            );
        }
    }
    v
}

fn family_n() -> Vec<CatalogEntry> {
    let num = |sign| {
        t(sign, vec![one(F, TWO_NK_MNQ.one(2)), pr(F, B_1, J1_M1).pow(2)], vec![pr(F, B, J0_M), pr(F, B_2, J0_M)])
    };
    let inner = |sign| t(sign, vec![pr(F, B_1, J0_M1).pow(2)], vec![pr(F, B, J0_M1), pr(F, B_2, J0_M1)]);
    let k = IndexExpr::nk(1);
    let fixed = |id, label, value, params: Params, term: Term| {
        e(id, "N", label, Cond::Any, term, ClosedFormSpec::Fixed(value)).frozen(params)
    };
    vec![
        e(
            "N1",
            "N",
            "sign (-1)^(nk-1), F(nk+jnq+1)^2 numerators, constant q/F(mnq)",
            Cond::Any,
            num(ALTNK),
            tele(over(-1, 1, &[(F, MNQ)]), Upper::Q, inner(NONE), Some((over(1, 1, &[(F, MNQ)]), ConstKind::One))),
        ),
        e(
            "N2",
            "N",
            "F(nk+jnq+1)^2 numerators, n odd and q even",
            Cond::NOddQEven,
            num(NONE),
            tele(over(1, 1, &[(F, MNQ)]), Upper::Q, inner(ALT1), None),
        )
        .notes("the factor (-1)^k multiplies each product once, not once per j"),
        fixed(
            "N3",
            "F(2k+3) / (F(k)^4 F(k+1)^3 F(k+2)^3 F(k+3)^4)",
            "1/128",
            Params::new(1, 1, 1, 0),
            t(
                NONE,
                vec![one(F, IndexExpr::nk(2).one(3))],
                vec![one(F, k).pow(4), one(F, k.one(1)).pow(3), one(F, k.one(2)).pow(3), one(F, k.one(3)).pow(4)],
            ),
        ),
        fixed(
            "N3L",
            "F(2k+3) / (L(k)^4 L(k+1)^3 L(k+2)^3 L(k+3)^4)",
            "1/829440",
            Params::new(1, 1, 1, 0),
            t(
                NONE,
                vec![one(F, IndexExpr::nk(2).one(3))],
                vec![one(L, k).pow(4), one(L, k.one(1)).pow(3), one(L, k.one(2)).pow(3), one(L, k.one(3)).pow(4)],
            ),
        ),
        fixed(
            "N4",
            "F(3k+1) F(3k+2) F(6k+3) / (F(3k)^4 F(3k+3)^4)",
            "1/128",
            Params::new(1, 3, 1, 0),
            t(
                NONE,
                vec![one(F, k.one(1)), one(F, k.one(2)), one(F, IndexExpr::nk(2).n(1))],
                vec![one(F, k).pow(4), one(F, k.n(1)).pow(4)],
            ),
        ),
        fixed(
            "N4L",
            "L(3k+1) L(3k+2) F(6k+3) / (L(3k)^4 L(3k+3)^4)",
            "1/10240",
            Params::new(1, 3, 1, 0),
            t(
                NONE,
                vec![one(L, k.one(1)), one(L, k.one(2)), one(F, IndexExpr::nk(2).n(1))],
                vec![one(L, k).pow(4), one(L, k.n(1)).pow(4)],
            ),
        ),
    ]
}

const FAMILY_TITLES: [(&str, &str); 13] = [
    ("A", FA),
    ("B", FB),
    ("C", FC),
    ("D", FD),
    ("E", FE),
    ("G", FG),
    ("H", FH),
    ("I", FI),
    ("J", FJ),
    ("K", FK),
    ("L", FL),
    ("M", FM),
    ("N", FN),
];

/// Descriptive title of a family letter.
pub fn family_title(family: &str) -> &'static str {
    FAMILY_TITLES.iter().find(|(f, _)| *f == family).map(|(_, t)| *t).unwrap_or("")
}

pub fn all() -> &'static [CatalogEntry] {
    static ALL: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    ALL.get_or_init(|| {
        let mut v = family_a();
        v.extend(family_b());
        v.extend(family_cd());
        v.extend(family_eg());
        v.extend(family_hi());
        v.extend(family_jk());
        v.extend(family_lm());
        v.extend(family_n());
        v
    })
}
