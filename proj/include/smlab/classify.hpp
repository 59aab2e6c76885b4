#pragma once

#include <map>

#include "smlab/module.hpp"

namespace smlab {

/// Single-quantifier mutations of the two central predicates, used by the
/// sensitivity harness to prove the theorem checkers are not vacuous.
enum class Mutation {
    none,
    semi_n_drop_nilpotent_guard,   // ignore r not-in sqrt(0)
    semi_n_drop_ann_guard,         // ignore Ann(m) = 0
    semi_n_forall_to_exists,       // one compliant pair suffices
    semi_n_conclude_membership,    // conclusion m in N instead of rm in N
    n_drop_radical_guard,          // ignore r not-in sqrt(Ann(M))
    n_forall_to_exists,
};

inline const char* mutation_name(Mutation m) {
    switch (m) {
        case Mutation::none: return "none";
        case Mutation::semi_n_drop_nilpotent_guard: return "semi_n_drop_nilpotent_guard";
        case Mutation::semi_n_drop_ann_guard: return "semi_n_drop_ann_guard";
        case Mutation::semi_n_forall_to_exists: return "semi_n_forall_to_exists";
        case Mutation::semi_n_conclude_membership: return "semi_n_conclude_membership";
        case Mutation::n_drop_radical_guard: return "n_drop_radical_guard";
        case Mutation::n_forall_to_exists: return "n_forall_to_exists";
    }
    return "?";
}

inline Mutation& active_mutation() {
    static Mutation m = Mutation::none;
    return m;
}

/// Scoped mutation switch for the harness.
struct MutationGuard {
    explicit MutationGuard(Mutation m) { active_mutation() = m; }
    ~MutationGuard() { active_mutation() = Mutation::none; }
};

/// The violating tuple behind a false classification flag: scalar
/// representative(s) and element(s), with printable names.
struct FlagWitness {
    std::vector<long long> tuple;
    std::string text;
};

struct PropertyVector {
    // per-submodule classification flags; nullopt = not applicable
    std::optional<bool> prime, primary, semiprime, r_sub, n_sub, semi_r, semi_n;
    std::optional<bool> pure, weakly_pure;
    // module-level flags
    std::optional<bool> multiplication, faithful, torsion_free;
    std::map<std::string, FlagWitness> witnesses;

    std::optional<bool> flag(const std::string& name) const {
        if (name == "prime") return prime;
        if (name == "primary") return primary;
        if (name == "semiprime") return semiprime;
        if (name == "r_sub") return r_sub;
        if (name == "n_sub") return n_sub;
        if (name == "semi_r") return semi_r;
        if (name == "semi_n") return semi_n;
        if (name == "pure") return pure;
        if (name == "weakly_pure") return weakly_pure;
        if (name == "multiplication") return multiplication;
        if (name == "faithful") return faithful;
        if (name == "torsion_free") return torsion_free;
        throw input_error("unknown classification flag: " + name);
    }
};

inline const std::vector<std::string>& classification_flag_names() {
    static const std::vector<std::string> names = {
        "prime",  "primary", "semiprime", "r_sub",       "n_sub",
        "semi_r", "semi_n",  "pure",      "weakly_pure", "multiplication",
        "faithful", "torsion_free"};
    return names;
}

namespace detail {

inline std::string scalar_name(const FiniteModule& m, int rep) {
    if (!m.base.is_integer()) return m.base.finite->name(rep);
    if (rep == m.exponent) return std::to_string(m.exponent) + "(=0 mod e)";
    return std::to_string(rep);
}

inline FlagWitness rm_witness(const FiniteModule& m, int rep, int elem) {
    return FlagWitness{{rep, elem},
                       "r=" + scalar_name(m, rep) + ", m=" + m.name(elem)};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Submodule predicates. Each quantifies exhaustively over the scalar
// representative domain and the module elements, and reports the first
// violating tuple in the fixed iteration order.
// ---------------------------------------------------------------------------

inline bool is_prime_submodule(const Submodule& n, FlagWitness* w = nullptr) {
    const FiniteModule& m = *n.module;
    ScalarSet colon = colon_ring(n);
    for (int r = 0; r < m.scalar_count(); ++r) {
        if (colon.contains_rep(r)) continue;
        for (int x = 0; x < m.order; ++x)
            if (n.contains(m.act(r, x)) && !n.contains(x)) {
                if (w) *w = detail::rm_witness(m, r, x);
                return false;
            }
    }
    return true;
}

inline bool is_primary_submodule(const Submodule& n, FlagWitness* w = nullptr) {
    const FiniteModule& m = *n.module;
    ScalarSet colon_rad = colon_ring(n).radical();
    for (int r = 0; r < m.scalar_count(); ++r) {
        if (colon_rad.contains_rep(r)) continue;
        for (int x = 0; x < m.order; ++x)
            if (n.contains(m.act(r, x)) && !n.contains(x)) {
                if (w) *w = detail::rm_witness(m, r, x);
                return false;
            }
    }
    return true;
}

inline bool is_semiprime_submodule(const Submodule& n, FlagWitness* w = nullptr) {
    const FiniteModule& m = *n.module;
    for (int r = 0; r < m.scalar_count(); ++r)
        for (int x = 0; x < m.order; ++x)
            if (n.contains(m.act(r, m.act(r, x))) && !n.contains(m.act(r, x))) {
                if (w) *w = detail::rm_witness(m, r, x);
                return false;
            }
    return true;
}

inline bool is_r_submodule(const Submodule& n, FlagWitness* w = nullptr) {
    const FiniteModule& m = *n.module;
    for (int r = 0; r < m.scalar_count(); ++r) {
        if (!m.scalar_regular_on_module(r)) continue;  // Ann_M(r) != 0
        for (int x = 0; x < m.order; ++x)
            if (n.contains(m.act(r, x)) && !n.contains(x)) {
                if (w) *w = detail::rm_witness(m, r, x);
                return false;
            }
    }
    return true;
}

inline bool is_n_submodule(const Submodule& n, FlagWitness* w = nullptr) {
    const FiniteModule& m = *n.module;
    const Mutation mut = active_mutation();
    const bool exists_mode = mut == Mutation::n_forall_to_exists;
    bool any_hyp = false;
    for (int r = 0; r < m.scalar_count(); ++r) {
        if (mut != Mutation::n_drop_radical_guard && m.scalar_in_sqrt_ann(r)) continue;
        for (int x = 0; x < m.order; ++x) {
            if (!n.contains(m.act(r, x))) continue;
            any_hyp = true;
            if (n.contains(x)) {
                if (exists_mode) return true;
            } else if (!exists_mode) {
                if (w) *w = detail::rm_witness(m, r, x);
                return false;
            }
        }
    }
    return exists_mode ? !any_hyp : true;
}

inline bool is_semi_r_submodule(const Submodule& n, FlagWitness* w = nullptr) {
    const FiniteModule& m = *n.module;
    for (int r = 0; r < m.scalar_count(); ++r) {
        if (!m.scalar_regular_on_module(r)) continue;
        for (int x = 0; x < m.order; ++x) {
            if (!m.elem_has_zero_ann(x)) continue;
            if (n.contains(m.act(r, m.act(r, x))) && !n.contains(m.act(r, x))) {
                if (w) *w = detail::rm_witness(m, r, x);
                return false;
            }
        }
    }
    return true;
}

/// The central predicate: r^2 m in N, r not nilpotent, Ann(m) = 0 force
/// rm in N.
inline bool is_semi_n_submodule(const Submodule& n, FlagWitness* w = nullptr) {
    const FiniteModule& m = *n.module;
    const Mutation mut = active_mutation();
    const bool exists_mode = mut == Mutation::semi_n_forall_to_exists;
    bool any_hyp = false;
    for (int r = 0; r < m.scalar_count(); ++r) {
        if (mut != Mutation::semi_n_drop_nilpotent_guard && m.scalar_nilpotent(r)) continue;
        for (int x = 0; x < m.order; ++x) {
            if (mut != Mutation::semi_n_drop_ann_guard && !m.elem_has_zero_ann(x)) continue;
            if (!n.contains(m.act(r, m.act(r, x)))) continue;
            any_hyp = true;
            const bool concl = mut == Mutation::semi_n_conclude_membership
                                   ? n.contains(x)
                                   : n.contains(m.act(r, x));
            if (concl) {
                if (exists_mode) return true;
            } else if (!exists_mode) {
                if (w) *w = detail::rm_witness(m, r, x);
                return false;
            }
        }
    }
    return exists_mode ? !any_hyp : true;
}

// ---------------------------------------------------------------------------
// rad(N), purity, multiplication
// ---------------------------------------------------------------------------

/// All prime submodules of M (cached on the module).
inline const std::vector<ElemSet>& prime_submodule_sets(const ModulePtr& mod,
                                                        const Caps& caps = default_caps()) {
    std::call_once(mod->primes_once_, [&] {
        std::vector<ElemSet> out;
        for (const Submodule& n : enumerate_submodules(mod, caps))
            if (n.is_proper() && is_prime_submodule(n)) out.push_back(n.members);
        mod->primes_cache_ = std::move(out);
    });
    return mod->primes_cache_;
}

/// rad(N): intersection of the prime submodules containing N; M when none
/// contains N (empty-intersection convention).
inline Submodule rad_submodule(const Submodule& n, const Caps& caps = default_caps()) {
    const ModulePtr& mod = n.module;
    ElemSet acc(mod->order);
    bool found = false;
    for (const ElemSet& p : prime_submodule_sets(mod, caps)) {
        if (!n.members.subset_of(p)) continue;
        if (!found) {
            acc = p;
            found = true;
        } else {
            acc = intersect(acc, p);
        }
    }
    if (!found) return full_submodule(mod);
    return Submodule{mod, acc, acc.items()};
}

/// The submodule IN generated by {a.x : a in I, x in N}.
inline Submodule scalar_set_times(const ScalarSet& i, const Submodule& n) {
    const FiniteModule& m = *n.module;
    ElemSet out(m.order);
    out.insert(m.zero);
    if (m.base.is_integer()) {
        for (int x : n.members.items()) out.insert(m.act_integer(i.gen, x));
    } else {
        for (int a : i.members.items())
            for (int x : n.members.items()) out.insert(m.act(a, x));
    }
    close_under_addition(out, [&m](int a, int b) { return m.add(a, b); });
    return Submodule{n.module, out, out.items()};
}

/// The ideals of the base ring as scalar sets: every ideal for a finite
/// base, dZ for d | e (plus 0) for the IntegerBase.
inline std::vector<ScalarSet> base_ideal_scalar_sets(const ModulePtr& mod,
                                                     const Caps& caps = default_caps()) {
    std::vector<ScalarSet> out;
    if (mod->base.is_integer()) {
        out.push_back(ScalarSet{mod->base, ElemSet{}, 0});
        for (long long d = 1; d <= mod->exponent; ++d)
            if (mod->exponent % d == 0) out.push_back(ScalarSet{mod->base, ElemSet{}, d});
    } else {
        for (const ElemSet& s : enumerate_ideal_sets(mod->base.finite, caps))
            out.push_back(ScalarSet{mod->base, s, 0});
    }
    return out;
}

/// pure: JN = JM and-intersect N for every ideal J.
inline bool is_pure_submodule(const Submodule& n, const Caps& caps = default_caps()) {
    Submodule full = full_submodule(n.module);
    for (const ScalarSet& j : base_ideal_scalar_sets(n.module, caps)) {
        Submodule jn = scalar_set_times(j, n);
        Submodule jm = scalar_set_times(j, full);
        if (!(intersect(jm.members, n.members) == jn.members)) return false;
    }
    return true;
}

/// weakly pure: JN = JM intersect rad(N) for every ideal J.
inline bool is_weakly_pure_submodule(const Submodule& n, const Caps& caps = default_caps()) {
    Submodule full = full_submodule(n.module);
    Submodule rad = rad_submodule(n, caps);
    for (const ScalarSet& j : base_ideal_scalar_sets(n.module, caps)) {
        Submodule jn = scalar_set_times(j, n);
        Submodule jm = scalar_set_times(j, full);
        if (!(intersect(jm.members, rad.members) == jn.members)) return false;
    }
    return true;
}

/// multiplication module: every submodule N equals (N :_R M) M.
inline bool is_multiplication_module(const ModulePtr& mod,
                                     const Caps& caps = default_caps()) {
    for (const Submodule& n : enumerate_submodules(mod, caps)) {
        Submodule via = scalar_set_times(colon_ring(n), full_submodule(mod));
        if (!(via.members == n.members)) return false;
    }
    return true;
}

inline bool is_faithful_module(const ModulePtr& mod) { return mod->ann_cache.is_zero(); }

// ---------------------------------------------------------------------------
// Theorem char1 helpers
// ---------------------------------------------------------------------------

/// Statement (3) of the characterization: sqrt((N : m)) = sqrt(0) union
/// (N : m). Only applicable when Ann(m) = 0; returns nullopt otherwise.
inline std::optional<bool> sqrt_colon_decomposition_holds(const Submodule& n, int elem) {
    const FiniteModule& m = *n.module;
    if (!m.elem_has_zero_ann(elem)) return std::nullopt;
    ScalarSet colon = colon_ring_elem(n, elem);
    ScalarSet rad = colon.radical();
    if (m.base.is_integer()) {
        // union with sqrt(0_Z) = {0} adds nothing to a subgroup
        return rad == colon;
    }
    const FiniteRing& r = *m.base.finite;
    for (int a = 0; a < r.order; ++a) {
        bool lhs = rad.members.contains(a);
        bool rhs = r.is_nilpotent(a) || colon.members.contains(a);
        if (lhs != rhs) return false;
    }
    return true;
}

/// Statement (2): the k-th power variant of the semi n condition, k up to
/// the module order.
inline bool semi_n_power_variant_holds(const Submodule& n, FlagWitness* w = nullptr) {
    const FiniteModule& m = *n.module;
    for (int r = 0; r < m.scalar_count(); ++r) {
        if (m.scalar_nilpotent(r)) continue;
        for (int x = 0; x < m.order; ++x) {
            if (!m.elem_has_zero_ann(x)) continue;
            int p = m.act(r, x);
            for (int k = 2; k <= m.order + 1; ++k) {
                p = m.act(r, p);  // r^k m
                if (n.contains(p) && !n.contains(m.act(r, x))) {
                    if (w) *w = detail::rm_witness(m, r, x);
                    return false;
                }
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Ideal classification (ring level)
// ---------------------------------------------------------------------------

inline bool is_prime_ideal(const Ideal& i, FlagWitness* w = nullptr) {
    const FiniteRing& r = *i.ring;
    for (int a = 0; a < r.order; ++a)
        for (int b = 0; b < r.order; ++b)
            if (i.contains(r.mul(a, b)) && !i.contains(a) && !i.contains(b)) {
                if (w) *w = FlagWitness{{a, b}, "a=" + r.name(a) + ", b=" + r.name(b)};
                return false;
            }
    return true;
}

inline bool is_primary_ideal(const Ideal& i, FlagWitness* w = nullptr) {
    const FiniteRing& r = *i.ring;
    Ideal rad = ideal_radical(i);
    for (int a = 0; a < r.order; ++a)
        for (int b = 0; b < r.order; ++b)
            if (i.contains(r.mul(a, b)) && !i.contains(a) && !rad.contains(b)) {
                if (w) *w = FlagWitness{{a, b}, "a=" + r.name(a) + ", b=" + r.name(b)};
                return false;
            }
    return true;
}

inline bool is_semiprime_ideal(const Ideal& i, FlagWitness* w = nullptr) {
    const FiniteRing& r = *i.ring;
    for (int a = 0; a < r.order; ++a)
        if (i.contains(r.mul(a, a)) && !i.contains(a)) {
            if (w) *w = FlagWitness{{a}, "a=" + r.name(a)};
            return false;
        }
    return true;
}

inline bool is_r_ideal(const Ideal& i, FlagWitness* w = nullptr) {
    const FiniteRing& r = *i.ring;
    for (int a = 0; a < r.order; ++a) {
        if (r.is_zero_divisor(a) || a == r.zero) continue;  // Ann(a) != 0
        for (int b = 0; b < r.order; ++b)
            if (i.contains(r.mul(a, b)) && !i.contains(b)) {
                if (w) *w = FlagWitness{{a, b}, "a=" + r.name(a) + ", b=" + r.name(b)};
                return false;
            }
    }
    return true;
}

inline bool is_n_ideal(const Ideal& i, FlagWitness* w = nullptr) {
    const FiniteRing& r = *i.ring;
    const Mutation mut = active_mutation();
    const bool exists_mode = mut == Mutation::n_forall_to_exists;
    bool any_hyp = false;
    for (int a = 0; a < r.order; ++a) {
        if (mut != Mutation::n_drop_radical_guard && r.is_nilpotent(a)) continue;
        for (int b = 0; b < r.order; ++b) {
            if (!i.contains(r.mul(a, b))) continue;
            any_hyp = true;
            if (i.contains(b)) {
                if (exists_mode) return true;
            } else if (!exists_mode) {
                if (w) *w = FlagWitness{{a, b}, "a=" + r.name(a) + ", b=" + r.name(b)};
                return false;
            }
        }
    }
    return exists_mode ? !any_hyp : true;
}

inline bool is_semi_r_ideal(const Ideal& i, FlagWitness* w = nullptr) {
    const FiniteRing& r = *i.ring;
    for (int a = 0; a < r.order; ++a) {
        bool ann_zero = true;
        for (int b = 0; b < r.order; ++b)
            if (b != r.zero && r.mul(a, b) == r.zero) {
                ann_zero = false;
                break;
            }
        if (!ann_zero) continue;
        if (i.contains(r.mul(a, a)) && !i.contains(a)) {
            if (w) *w = FlagWitness{{a}, "a=" + r.name(a)};
            return false;
        }
    }
    return true;
}

inline bool is_semi_n_ideal(const Ideal& i, FlagWitness* w = nullptr) {
    const FiniteRing& r = *i.ring;
    const Mutation mut = active_mutation();
    const bool exists_mode = mut == Mutation::semi_n_forall_to_exists;
    bool any_hyp = false;
    for (int a = 0; a < r.order; ++a) {
        if (mut != Mutation::semi_n_drop_nilpotent_guard && r.is_nilpotent(a)) continue;
        if (!i.contains(r.mul(a, a))) continue;
        any_hyp = true;
        // the conclude-membership mutation coincides with the unmutated
        // conclusion at the ring level (a^2 in I forces a in I either way)
        if (i.contains(a)) {
            if (exists_mode) return true;
        } else if (!exists_mode) {
            if (w) *w = FlagWitness{{a}, "a=" + r.name(a)};
            return false;
        }
    }
    return exists_mode ? !any_hyp : true;
}

/// Semi n-ideal test for a ScalarSet over either base kind. For gZ the
/// condition "g | a^2 and a != 0 imply g | a" holds iff g is 0 or
/// squarefree. Callers must pass a proper set.
inline bool scalar_set_is_semi_n_ideal(const ScalarSet& s) {
    if (s.base.is_integer()) return s.gen == 0 || int_radical(s.gen) == s.gen;
    Ideal i{s.base.finite, s.members, s.members.items()};
    return is_semi_n_ideal(i);
}

// ---------------------------------------------------------------------------
// Full classification
// ---------------------------------------------------------------------------

inline PropertyVector classify_submodule(const Submodule& n,
                                         const Caps& caps = default_caps()) {
    PropertyVector pv;
    pv.multiplication = is_multiplication_module(n.module, caps);
    pv.faithful = is_faithful_module(n.module);
    pv.torsion_free = is_torsion_free(n.module);
    if (!n.is_proper()) return pv;  // classification flags not applicable
    FlagWitness w;
    auto run = [&](const char* name, auto fn) -> bool {
        bool ok = fn(&w);
        if (!ok) pv.witnesses[name] = w;
        return ok;
    };
    pv.prime = run("prime", [&](FlagWitness* x) { return is_prime_submodule(n, x); });
    pv.primary = run("primary", [&](FlagWitness* x) { return is_primary_submodule(n, x); });
    pv.semiprime = run("semiprime", [&](FlagWitness* x) { return is_semiprime_submodule(n, x); });
    pv.r_sub = run("r_sub", [&](FlagWitness* x) { return is_r_submodule(n, x); });
    pv.n_sub = run("n_sub", [&](FlagWitness* x) { return is_n_submodule(n, x); });
    pv.semi_r = run("semi_r", [&](FlagWitness* x) { return is_semi_r_submodule(n, x); });
    pv.semi_n = run("semi_n", [&](FlagWitness* x) { return is_semi_n_submodule(n, x); });
    pv.pure = is_pure_submodule(n, caps);
    pv.weakly_pure = is_weakly_pure_submodule(n, caps);
    return pv;
}

inline PropertyVector classify_ideal(const RingPtr& ring, const Ideal& i) {
    if (i.ring != ring) throw input_error("classify_ideal: ideal of a different ring");
    PropertyVector pv;
    if (!i.is_proper()) return pv;
    FlagWitness w;
    auto run = [&](const char* name, auto fn) -> bool {
        bool ok = fn(&w);
        if (!ok) pv.witnesses[name] = w;
        return ok;
    };
    pv.prime = run("prime", [&](FlagWitness* x) { return is_prime_ideal(i, x); });
    pv.primary = run("primary", [&](FlagWitness* x) { return is_primary_ideal(i, x); });
    pv.semiprime = run("semiprime", [&](FlagWitness* x) { return is_semiprime_ideal(i, x); });
    pv.r_sub = run("r_sub", [&](FlagWitness* x) { return is_r_ideal(i, x); });
    pv.n_sub = run("n_sub", [&](FlagWitness* x) { return is_n_ideal(i, x); });
    pv.semi_r = run("semi_r", [&](FlagWitness* x) { return is_semi_r_ideal(i, x); });
    pv.semi_n = run("semi_n", [&](FlagWitness* x) { return is_semi_n_ideal(i, x); });
    return pv;
}

}  // namespace smlab
