//! Deterministic formula generators for the law suites.
//!
//! Every generator draws from a ChaCha stream keyed by (seed, stream id).
//! Each law owns one stream id, so growing the case count of one law never
//! shifts the sentences another law sees. Variable names (`x0`, `x1`, …)
//! are kept disjoint from the predicate and constant pools, which makes
//! shadowing and namespace clashes impossible by construction.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::syntax::{Formula, Quantifier, Term};

pub struct Gen {
    rng: ChaCha8Rng,
}

/// Leaf vocabulary for matrix generation.
struct Pool<'a> {
    /// (name, arity); arity-0 entries become propositional atoms.
    preds: &'a [(&'a str, usize)],
    constants: &'a [&'a str],
}

const GENERAL_POOL: Pool<'static> = Pool {
    preds: &[("A", 0), ("P", 1), ("Q", 2)],
    constants: &["c", "d"],
};

/// The gluing suite runs exhaustive interpretation enumeration, so its
/// vocabulary is pinned to one unary predicate and one constant.
const GLUING_POOL: Pool<'static> = Pool {
    preds: &[("P", 1)],
    constants: &["c"],
};

impl Gen {
    pub fn new(seed: u64, stream: u64) -> Gen {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Gen { rng }
    }

    fn choice(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    fn coin(&mut self) -> bool {
        self.rng.gen_range(0..2) == 0
    }

    /// A closed formula of AST depth ≤ `depth` with quantifiers allowed
    /// anywhere, over the general vocabulary.
    pub fn closed_formula(&mut self, depth: usize) -> Formula {
        let mut scope = Vec::new();
        let mut fresh = 0;
        self.grow(&GENERAL_POOL, depth, true, &mut scope, &mut fresh)
    }

    /// A closed formula of AST depth ≤ 4 over `{P/1, c}`.
    pub fn gluing_formula(&mut self) -> Formula {
        let mut scope = Vec::new();
        let mut fresh = 0;
        self.grow(&GLUING_POOL, 4, true, &mut scope, &mut fresh)
    }

    fn grow(
        &mut self,
        pool: &Pool<'_>,
        depth: usize,
        quantifiers: bool,
        scope: &mut Vec<String>,
        fresh: &mut usize,
    ) -> Formula {
        if depth == 0 {
            return self.leaf(pool, scope);
        }
        match self.choice(if quantifiers { 12 } else { 9 }) {
            0 | 1 => self.leaf(pool, scope),
            2 | 3 => {
                let a = self.grow(pool, depth - 1, quantifiers, scope, fresh);
                let b = self.grow(pool, depth - 1, quantifiers, scope, fresh);
                Formula::and(a, b)
            }
            4 | 5 => {
                let a = self.grow(pool, depth - 1, quantifiers, scope, fresh);
                let b = self.grow(pool, depth - 1, quantifiers, scope, fresh);
                Formula::or(a, b)
            }
            6..=8 => {
                let a = self.grow(pool, depth - 1, quantifiers, scope, fresh);
                let b = self.grow(pool, depth - 1, quantifiers, scope, fresh);
                Formula::implies(a, b)
            }
            _ => {
                let var = format!("x{fresh}");
                *fresh += 1;
                scope.push(var.clone());
                let body = self.grow(pool, depth - 1, quantifiers, scope, fresh);
                scope.pop();
                Formula::quantify(
                    if self.coin() {
                        Quantifier::Forall
                    } else {
                        Quantifier::Exists
                    },
                    var,
                    body,
                )
            }
        }
    }

    fn leaf(&mut self, pool: &Pool<'_>, scope: &[String]) -> Formula {
        if self.choice(8) == 0 {
            return Formula::Bottom;
        }
        let (name, arity) = pool.preds[self.choice(pool.preds.len())];
        let args = (0..arity).map(|_| self.term(pool, scope)).collect();
        Formula::atom(name, args)
    }

    fn term(&mut self, pool: &Pool<'_>, scope: &[String]) -> Term {
        // Prefer bound variables so quantifiers are rarely vacuous.
        if !scope.is_empty() && (pool.constants.is_empty() || self.choice(4) > 0) {
            Term::var(scope[self.choice(scope.len())].clone())
        } else {
            Term::constant(pool.constants[self.choice(pool.constants.len())])
        }
    }

    /// Quantifier-free matrix of depth ≤ `depth` over the given bound
    /// variables and a sampled sub-vocabulary.
    fn matrix(&mut self, pool: &Pool<'_>, vars: &[String], depth: usize) -> Formula {
        let mut scope = vars.to_vec();
        let mut fresh = 0;
        self.grow(pool, depth, false, &mut scope, &mut fresh)
    }

    /// A prenex sentence with a mixed prefix of length ≤ `max_len`
    /// (possibly outside the BS class) over the general vocabulary.
    pub fn prenex_sentence(&mut self, max_len: usize) -> Formula {
        let len = self.choice(max_len + 1);
        let prefix: Vec<(Quantifier, String)> = (0..len)
            .map(|i| {
                let q = if self.coin() {
                    Quantifier::Forall
                } else {
                    Quantifier::Exists
                };
                (q, format!("x{i}"))
            })
            .collect();
        let vars: Vec<String> = prefix.iter().map(|(_, v)| v.clone()).collect();
        let matrix = self.matrix(&GENERAL_POOL, &vars, 3);
        prefix
            .into_iter()
            .rev()
            .fold(matrix, |f, (q, v)| Formula::quantify(q, v, f))
    }

    /// A fresh matrix over the same bound variables, for laws that check a
    /// property depends on the prefix only.
    pub fn replacement_matrix(&mut self, vars: &[String]) -> Formula {
        self.matrix(&GENERAL_POOL, vars, 3)
    }

    /// A `∀⁺∃⁺` sentence: 1-2 universals then 1-2 existentials, ≤ 2
    /// predicates of arity ≤ 2, at most one constant.
    pub fn validity_sentence(&mut self) -> Formula {
        self.two_block_sentence(Quantifier::Forall, Quantifier::Exists)
    }

    /// The dual `∃⁺∀⁺` sentence for 1-satisfiability.
    pub fn sat_sentence(&mut self) -> Formula {
        self.two_block_sentence(Quantifier::Exists, Quantifier::Forall)
    }

    fn two_block_sentence(&mut self, first: Quantifier, second: Quantifier) -> Formula {
        let n_first = 1 + self.choice(2);
        let n_second = 1 + self.choice(2);
        let mut prefix = Vec::new();
        for i in 0..n_first + n_second {
            let q = if i < n_first { first } else { second };
            prefix.push((q, format!("x{i}")));
        }
        let vars: Vec<String> = prefix.iter().map(|(_, v)| v.clone()).collect();
        let pool = self.sampled_pool();
        let matrix = self.matrix(&pool, &vars, 3);
        prefix
            .into_iter()
            .rev()
            .fold(matrix, |f, (q, v)| Formula::quantify(q, v, f))
    }

    /// A single-block sentence (`∀*` or `∃*` only, length ≤ 2, possibly
    /// empty) whose matrix may mention the constants `c`, `d`.
    pub fn single_block_sentence(&mut self, kind: Quantifier) -> Formula {
        let len = self.choice(3);
        let vars: Vec<String> = (0..len).map(|i| format!("x{i}")).collect();
        let matrix = self.matrix(&GENERAL_POOL, &vars, 3);
        vars.into_iter()
            .rev()
            .fold(matrix, |f, v| Formula::quantify(kind, v, f))
    }

    fn sampled_pool(&mut self) -> Pool<'static> {
        const PRED_CHOICES: &[&[(&str, usize)]] = &[
            &[("P", 1)],
            &[("P", 2)],
            &[("P", 1), ("Q", 1)],
            &[("P", 1), ("Q", 2)],
            &[("P", 2), ("Q", 1)],
            &[("P", 2), ("Q", 2)],
        ];
        const CONST_CHOICES: &[&[&str]] = &[&[], &["c"]];
        Pool {
            preds: PRED_CHOICES[self.choice(PRED_CHOICES.len())],
            constants: CONST_CHOICES[self.choice(CONST_CHOICES.len())],
        }
    }

    /// A quantifier-free ground formula over ≤ `max_atoms` propositional
    /// atoms `B1…`, depth ≤ `depth`.
    pub fn ground_formula(&mut self, max_atoms: usize, depth: usize) -> Formula {
        let n = 1 + self.choice(max_atoms);
        let names: Vec<String> = (1..=n).map(|i| format!("B{i}")).collect();
        self.ground_rec(&names, depth)
    }

    fn ground_rec(&mut self, names: &[String], depth: usize) -> Formula {
        if depth == 0 {
            return if self.choice(8) == 0 {
                Formula::Bottom
            } else {
                Formula::prop(names[self.choice(names.len())].clone())
            };
        }
        match self.choice(9) {
            0 | 1 => self.ground_rec(names, 0),
            2 | 3 => Formula::and(
                self.ground_rec(names, depth - 1),
                self.ground_rec(names, depth - 1),
            ),
            4 | 5 => Formula::or(
                self.ground_rec(names, depth - 1),
                self.ground_rec(names, depth - 1),
            ),
            _ => Formula::implies(
                self.ground_rec(names, depth - 1),
                self.ground_rec(names, depth - 1),
            ),
        }
    }
}
