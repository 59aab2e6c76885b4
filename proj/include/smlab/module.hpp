#pragma once

#include "smlab/ring.hpp"

namespace smlab {

/// The ring a module is defined over: either a finite ring or the integers
/// acting on a finite abelian group through its exponent.
struct BaseRing {
    RingPtr finite;  // null => IntegerBase
    bool is_integer() const { return finite == nullptr; }

    friend bool operator==(const BaseRing& a, const BaseRing& b) {
        return a.finite == b.finite;
    }
};

inline BaseRing integer_base() { return BaseRing{nullptr}; }
inline BaseRing finite_base(RingPtr r) { return BaseRing{std::move(r)}; }

struct ModuleHomAcrossHom;

struct ModuleCons {
    enum class Kind { cyclic, product, quotient, duplication, amalgam_module, ring_as_module };
    Kind kind = Kind::cyclic;
    long long k = 0;  // cyclic
    ModulePtr m1, m2;
    RingPtr ring_src;                              // ring_as_module
    std::vector<int> aux_gens;                     // quotient: gens of L; duplication: gens of J
    std::shared_ptr<const RingHom> f;              // amalgam
    std::shared_ptr<const ModuleHomAcrossHom> phi; // amalgam
};

/// A set of scalars: an ideal-like subset of the base ring. For a finite
/// base it is an element subset; for the IntegerBase it is gZ for g >= 0
/// with g | exponent (membership of a representative r is then g | r).
struct ScalarSet {
    BaseRing base;
    ElemSet members;    // finite base only
    long long gen = 0;  // IntegerBase only

    bool is_zero() const {
        return base.is_integer() ? gen == 0 : members.size() == 1;
    }
    bool is_all() const {
        return base.is_integer() ? gen == 1 : members.size() == members.universe();
    }
    bool is_proper() const { return !is_all(); }

    /// Membership of a scalar representative (see FiniteModule for the
    /// IntegerBase representative scheme).
    bool contains_rep(long long rep) const {
        if (!base.is_integer()) return members.contains(static_cast<int>(rep));
        if (gen == 0) return rep == 0;
        return rep % gen == 0;
    }

    ScalarSet radical() const {
        if (base.is_integer()) return ScalarSet{base, ElemSet{}, int_radical(gen)};
        Ideal i{base.finite, members, members.items()};
        return ScalarSet{base, ideal_radical(i).members, 0};
    }

    friend bool operator==(const ScalarSet& a, const ScalarSet& b) {
        if (a.base.is_integer() != b.base.is_integer()) return false;
        return a.base.is_integer() ? a.gen == b.gen : a.members == b.members;
    }
};

/// A finite module over a BaseRing. Scalars are quantified through dense
/// representatives: ring element ids for a finite base, and {0, ..., e}
/// for the IntegerBase with exponent e. The extra representative e stands
/// for a nonzero integer acting as zero, so that "r not nilpotent in Z"
/// (r != 0) and the action of r decouple correctly.
struct FiniteModule {
    BaseRing base;
    int order = 0;
    int zero = 0;
    long long exponent = 1;  // IntegerBase only; smallest e >= 1 with e.m = 0
    std::vector<int> add_table, neg_table;
    std::vector<int> scalar_table;  // scalar_count() rows of `order` entries
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> pairs;  // composite decode; empty if atomic
    ModuleCons cons;

    // filled by finalize
    ScalarSet sqrt_ann_cache;  // sqrt(Ann_R(M))
    ScalarSet ann_cache;       // Ann_R(M)

    int add(int a, int b) const { return add_table[a * order + b]; }
    int neg(int a) const { return neg_table[a]; }
    int sub(int a, int b) const { return add(a, neg(b)); }

    int scalar_count() const {
        return base.is_integer() ? static_cast<int>(exponent) + 1 : base.finite->order;
    }
    int act(int rep, int m) const { return scalar_table[rep * order + m]; }

    /// Action of an arbitrary integer (IntegerBase only).
    int act_integer(long long r, int m) const {
        long long rr = r % exponent;
        if (rr < 0) rr += exponent;
        return act(static_cast<int>(rr), m);
    }

    /// The representative of the literal zero scalar.
    int zero_rep() const { return base.is_integer() ? 0 : base.finite->zero; }
    int one_rep() const { return base.is_integer() ? (exponent == 1 ? 0 : 1) : base.finite->one; }

    bool scalar_nilpotent(int rep) const {
        return base.is_integer() ? rep == 0 : base.finite->is_nilpotent(rep);
    }
    bool scalar_in_sqrt_ann(int rep) const { return sqrt_ann_cache.contains_rep(rep); }

    /// Ann_M(rep) = {m : rep.m = 0} equals {0}?
    bool scalar_regular_on_module(int rep) const {
        for (int m = 0; m < order; ++m)
            if (m != zero && act(rep, m) == zero) return false;
        return true;
    }

    bool scalar_annihilates_module(int rep) const {
        for (int m = 0; m < order; ++m)
            if (act(rep, m) != zero) return false;
        return true;
    }

    /// Ann_R(m) = 0? Over the IntegerBase this is false for every element
    /// of a finite module (the order of m is a nonzero annihilator).
    bool elem_has_zero_ann(int m) const {
        if (base.is_integer()) return false;
        const FiniteRing& r = *base.finite;
        for (int a = 0; a < r.order; ++a)
            if (a != r.zero && act(a, m) == zero) return false;
        return true;
    }

    const std::string& name(int m) const { return names[m]; }

    bool is_zero_module() const { return order == 1; }

    mutable std::once_flag subs_once_;
    mutable std::vector<ElemSet> subs_cache_;
    mutable std::once_flag primes_once_;
    mutable std::vector<ElemSet> primes_cache_;
};

struct Submodule {
    ModulePtr module;
    ElemSet members;
    std::vector<int> gens;

    bool contains(int m) const { return members.contains(m); }
    bool is_proper() const { return members.size() < module->order; }
    bool is_zero() const { return members.size() == 1; }

    friend bool operator==(const Submodule& a, const Submodule& b) {
        return a.module == b.module && a.members == b.members;
    }
};

inline ElemSet submodule_closure(const FiniteModule& m, const std::vector<int>& gens) {
    ElemSet out(m.order);
    out.insert(m.zero);
    const int reps = m.scalar_count();
    for (int g : gens)
        for (int r = 0; r < reps; ++r) out.insert(m.act(r, g));
    close_under_addition(out, [&m](int a, int b) { return m.add(a, b); });
    return out;
}

inline Submodule make_submodule(ModulePtr m, std::vector<int> gens) {
    for (int g : gens)
        if (g < 0 || g >= m->order) throw input_error("submodule generator out of range");
    ElemSet members = submodule_closure(*m, gens);
    return Submodule{std::move(m), std::move(members), std::move(gens)};
}

inline Submodule zero_submodule(ModulePtr m) { return make_submodule(std::move(m), {}); }
inline Submodule full_submodule(ModulePtr m) {
    std::vector<int> gens(m->order);
    std::iota(gens.begin(), gens.end(), 0);
    return Submodule{m, submodule_closure(*m, gens), std::move(gens)};
}

namespace detail {

inline void check_module_axioms(const FiniteModule& m) {
    auto bad = [&](const char* what) {
        throw input_error(std::string("module axiom violated: ") + what);
    };
    const int n = m.order;
    const bool full = n <= 64;
    const int step = full ? 1 : std::max(1, n / 17);
    for (int a = 0; a < n; ++a) {
        if (m.add(a, m.zero) != a) bad("additive identity");
        if (m.add(a, m.neg(a)) != m.zero) bad("additive inverse");
        if (m.act(m.one_rep(), a) != a) bad("unital action");
    }
    for (int a = 0; a < n; a += step)
        for (int b = 0; b < n; b += step)
            if (m.add(a, b) != m.add(b, a)) bad("addition commutativity");
    if (!m.base.is_integer()) {
        const FiniteRing& r = *m.base.finite;
        const int rstep = r.order <= 64 ? 1 : std::max(1, r.order / 17);
        for (int s = 0; s < r.order; s += rstep)
            for (int t = 0; t < r.order; t += rstep)
                for (int a = 0; a < n; a += step) {
                    if (m.act(r.mul(s, t), a) != m.act(s, m.act(t, a)))
                        bad("action associativity");
                    if (m.act(r.add(s, t), a) != m.add(m.act(s, a), m.act(t, a)))
                        bad("action distributivity over scalars");
                }
    }
}

inline void compute_module_derived(FiniteModule& m) {
    if (m.base.is_integer()) {
        // Ann_Z(M) = eZ, sqrt = rad(e)Z; these are definitional, not scanned.
        m.ann_cache = ScalarSet{m.base, ElemSet{}, m.exponent};
        m.sqrt_ann_cache = ScalarSet{m.base, ElemSet{}, int_radical(m.exponent)};
        return;
    }
    const FiniteRing& r = *m.base.finite;
    ElemSet ann(r.order);
    for (int a = 0; a < r.order; ++a)
        if (m.scalar_annihilates_module(a)) ann.insert(a);
    Ideal ann_ideal{m.base.finite, ann, ann.items()};
    m.ann_cache = ScalarSet{m.base, ann, 0};
    m.sqrt_ann_cache = ScalarSet{m.base, ideal_radical(ann_ideal).members, 0};
}

inline ModulePtr finalize_module(std::shared_ptr<FiniteModule> m, const Caps& caps) {
    if (m->order > caps.max_module_order)
        throw capacity_error("module order " + std::to_string(m->order) +
                             " exceeds cap " + std::to_string(caps.max_module_order));
    check_module_axioms(*m);
    compute_module_derived(*m);
    return m;
}

/// Exponent of a finite abelian group given by its add table.
inline long long group_exponent(const FiniteModule& m) {
    long long e = 1;
    for (int a = 0; a < m.order; ++a) {
        int x = a;
        long long ord = 1;
        while (x != m.zero) {
            x = m.add(x, a);
            ++ord;
        }
        e = std::lcm(e, ord);
    }
    return e;
}

inline void fill_integer_scalar_rows(FiniteModule& m) {
    const long long e = m.exponent;
    m.scalar_table.assign(static_cast<std::size_t>(e + 1) * m.order, m.zero);
    for (int mm = 0; mm < m.order; ++mm) {
        int acc = m.zero;
        for (long long r = 0; r < e; ++r) {
            m.scalar_table[static_cast<std::size_t>(r) * m.order + mm] = acc;
            acc = m.add(acc, mm);
        }
        // row e: a nonzero integer congruent to 0 mod e, hence acting as zero
        m.scalar_table[static_cast<std::size_t>(e) * m.order + mm] = m.zero;
    }
}

}  // namespace detail

/// The Z-module (or Z_n-module, when the base is finite) Z_k. For a finite
/// base Z_n the action r.m = (r mod k).m needs k | n.
inline ModulePtr make_cyclic_module(long long k, BaseRing base,
                                    const Caps& caps = default_caps()) {
    if (k < 1) throw input_error("make_cyclic_module: k must be >= 1");
    if (k > caps.max_module_order)
        throw capacity_error("module order " + std::to_string(k) + " exceeds cap " +
                             std::to_string(caps.max_module_order));
    auto m = std::make_shared<FiniteModule>();
    const int n = static_cast<int>(k);
    m->base = base;
    m->order = n;
    m->zero = 0;
    m->add_table.resize(n * n);
    m->neg_table.resize(n);
    m->names.resize(n);
    for (int a = 0; a < n; ++a) {
        m->neg_table[a] = (n - a) % n;
        m->names[a] = std::to_string(a);
        for (int b = 0; b < n; ++b) m->add_table[a * n + b] = (a + b) % n;
    }
    if (base.is_integer()) {
        m->exponent = k;
        detail::fill_integer_scalar_rows(*m);
    } else {
        const FiniteRing& r = *base.finite;
        if (r.cons.kind != RingCons::Kind::zn || r.cons.n % k != 0)
            throw input_error("make_cyclic_module: " + std::to_string(k) +
                              " does not divide the base ring order");
        m->scalar_table.resize(static_cast<std::size_t>(r.order) * n);
        for (int s = 0; s < r.order; ++s)
            for (int a = 0; a < n; ++a)
                m->scalar_table[static_cast<std::size_t>(s) * n + a] =
                    static_cast<int>((static_cast<long long>(s) * a) % k);
    }
    m->cons.kind = ModuleCons::Kind::cyclic;
    m->cons.k = k;
    return detail::finalize_module(std::move(m), caps);
}

/// R viewed as a module over itself; submodules are exactly the ideals.
inline ModulePtr ring_as_module(RingPtr r, const Caps& caps = default_caps()) {
    auto m = std::make_shared<FiniteModule>();
    m->base = finite_base(r);
    m->order = r->order;
    m->zero = r->zero;
    m->add_table = r->add_table;
    m->neg_table = r->neg_table;
    m->scalar_table = r->mul_table;
    m->names = r->names;
    m->pairs = r->pairs;
    m->cons.kind = ModuleCons::Kind::ring_as_module;
    m->cons.ring_src = std::move(r);
    return detail::finalize_module(std::move(m), caps);
}

inline ModulePtr product_module(ModulePtr m1, ModulePtr m2,
                                const Caps& caps = default_caps()) {
    if (!(m1->base == m2->base))
        throw input_error("product_module: factors over different base rings");
    auto m = std::make_shared<FiniteModule>();
    const int n1 = m1->order, n2 = m2->order, n = n1 * n2;
    if (static_cast<long long>(n1) * n2 > caps.max_module_order)
        throw capacity_error("product module order exceeds cap " +
                             std::to_string(caps.max_module_order));
    auto enc = [n2](int a, int b) { return a * n2 + b; };
    m->base = m1->base;
    m->order = n;
    m->zero = enc(m1->zero, m2->zero);
    m->add_table.resize(static_cast<std::size_t>(n) * n);
    m->neg_table.resize(n);
    m->names.resize(n);
    m->pairs.resize(n);
    for (int a1 = 0; a1 < n1; ++a1)
        for (int a2 = 0; a2 < n2; ++a2) {
            int a = enc(a1, a2);
            m->pairs[a] = {a1, a2};
            m->neg_table[a] = enc(m1->neg(a1), m2->neg(a2));
            m->names[a] = "(" + m1->name(a1) + "," + m2->name(a2) + ")";
            for (int b1 = 0; b1 < n1; ++b1)
                for (int b2 = 0; b2 < n2; ++b2)
                    m->add_table[static_cast<std::size_t>(a) * n + enc(b1, b2)] =
                        enc(m1->add(a1, b1), m2->add(a2, b2));
        }
    if (m->base.is_integer()) {
        m->exponent = std::lcm(m1->exponent, m2->exponent);
        detail::fill_integer_scalar_rows(*m);
    } else {
        const int reps = m->scalar_count();
        m->scalar_table.resize(static_cast<std::size_t>(reps) * n);
        for (int s = 0; s < reps; ++s)
            for (int a1 = 0; a1 < n1; ++a1)
                for (int a2 = 0; a2 < n2; ++a2)
                    m->scalar_table[static_cast<std::size_t>(s) * n + enc(a1, a2)] =
                        enc(m1->act(s, a1), m2->act(s, a2));
    }
    m->cons.kind = ModuleCons::Kind::product;
    m->cons.m1 = std::move(m1);
    m->cons.m2 = std::move(m2);
    return detail::finalize_module(std::move(m), caps);
}

/// All submodules exactly once: cyclic seeds closed under pairwise sums.
inline const std::vector<ElemSet>& enumerate_submodule_sets(const ModulePtr& mod,
                                                            const Caps& caps = default_caps()) {
    std::call_once(mod->subs_once_, [&] {
        const FiniteModule& m = *mod;
        std::set<std::vector<int>> seen;
        std::vector<ElemSet> found;
        auto try_add = [&](const ElemSet& s) {
            if (seen.insert(s.items()).second) {
                found.push_back(s);
                if (static_cast<int>(found.size()) > caps.max_lattice)
                    throw capacity_error("submodule lattice exceeds cap " +
                                         std::to_string(caps.max_lattice));
                return true;
            }
            return false;
        };
        for (int a = 0; a < m.order; ++a) try_add(submodule_closure(m, {a}));
        for (std::size_t i = 0; i < found.size(); ++i)
            for (std::size_t j = 0; j < i; ++j) {
                ElemSet sum = found[i];
                bool grew = false;
                for (int x : found[j].items()) grew |= sum.insert(x);
                if (!grew) continue;
                close_under_addition(sum, [&m](int a, int b) { return m.add(a, b); });
                try_add(sum);
            }
        std::sort(found.begin(), found.end(), [](const ElemSet& a, const ElemSet& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a.items() < b.items();
        });
        mod->subs_cache_ = std::move(found);
    });
    return mod->subs_cache_;
}

inline std::vector<Submodule> enumerate_submodules(const ModulePtr& mod,
                                                   const Caps& caps = default_caps()) {
    std::vector<Submodule> out;
    for (const ElemSet& s : enumerate_submodule_sets(mod, caps))
        out.push_back(Submodule{mod, s, s.items()});
    return out;
}

// ---------------------------------------------------------------------------
// Residuals, annihilators, torsion
// ---------------------------------------------------------------------------

/// (N :_R M) = {r : rM subset of N}.
inline ScalarSet colon_ring(const Submodule& n) {
    const FiniteModule& m = *n.module;
    auto sends_all = [&](int rep) {
        for (int x = 0; x < m.order; ++x)
            if (!n.contains(m.act(rep, x))) return false;
        return true;
    };
    if (m.base.is_integer()) {
        for (long long r = 1; r <= m.exponent; ++r)
            if (sends_all(static_cast<int>(r)))
                return ScalarSet{m.base, ElemSet{}, r};  // subgroup rZ + eZ = rZ since r | e at minimum
        return ScalarSet{m.base, ElemSet{}, 0};          // unreachable: e always qualifies
    }
    ElemSet out(m.base.finite->order);
    for (int rep = 0; rep < m.scalar_count(); ++rep)
        if (sends_all(rep)) out.insert(rep);
    return ScalarSet{m.base, out, 0};
}

/// (N :_R m) = {r : r.m in N}.
inline ScalarSet colon_ring_elem(const Submodule& n, int elem) {
    const FiniteModule& m = *n.module;
    if (m.base.is_integer()) {
        for (long long r = 1; r <= m.exponent; ++r)
            if (n.contains(m.act(static_cast<int>(r), elem)))
                return ScalarSet{m.base, ElemSet{}, r};
        return ScalarSet{m.base, ElemSet{}, 0};
    }
    ElemSet out(m.base.finite->order);
    for (int rep = 0; rep < m.scalar_count(); ++rep)
        if (n.contains(m.act(rep, elem))) out.insert(rep);
    return ScalarSet{m.base, out, 0};
}

inline ScalarSet ann_module(const ModulePtr& m) { return m->ann_cache; }

inline ScalarSet ann_elem(const ModulePtr& m, int elem) {
    Submodule z = zero_submodule(m);
    return colon_ring_elem(z, elem);
}

/// (N :_M I) = {m : Im subset of N}, a submodule containing N.
inline Submodule colon_module(const Submodule& n, const ScalarSet& i) {
    const FiniteModule& m = *n.module;
    ElemSet out(m.order);
    if (m.base.is_integer()) {
        // I = gZ: membership reduces to g.m in N (N is closed under Z-action).
        for (int x = 0; x < m.order; ++x)
            if (n.contains(m.act_integer(i.gen, x))) out.insert(x);
    } else {
        for (int x = 0; x < m.order; ++x) {
            bool ok = true;
            for (int rep : i.members.items())
                if (!n.contains(m.act(rep, x))) {
                    ok = false;
                    break;
                }
            if (ok) out.insert(x);
        }
    }
    return Submodule{n.module, out, out.items()};
}

/// (N :_M a) for a single scalar representative.
inline Submodule colon_module_elem(const Submodule& n, int rep) {
    const FiniteModule& m = *n.module;
    ElemSet out(m.order);
    for (int x = 0; x < m.order; ++x)
        if (n.contains(m.act(rep, x))) out.insert(x);
    return Submodule{n.module, out, out.items()};
}

/// T(M): elements killed by some nonzero scalar.
inline ElemSet torsion_elements(const ModulePtr& mod) {
    const FiniteModule& m = *mod;
    ElemSet out(m.order);
    out.insert(m.zero);
    const int first = m.base.is_integer() ? 1 : 0;
    for (int x = 0; x < m.order; ++x) {
        if (out.contains(x)) continue;
        for (int rep = first; rep < m.scalar_count(); ++rep) {
            if (!m.base.is_integer() && rep == m.zero_rep()) continue;
            if (m.act(rep, x) == m.zero) {
                out.insert(x);
                break;
            }
        }
    }
    return out;
}

inline bool is_torsion_free(const ModulePtr& mod) {
    return torsion_elements(mod).size() == 1;
}

/// Z(M): scalar representatives annihilating some nonzero element.
inline std::vector<int> module_zero_divisor_reps(const ModulePtr& mod) {
    const FiniteModule& m = *mod;
    std::vector<int> out;
    for (int rep = 0; rep < m.scalar_count(); ++rep)
        if (!m.scalar_regular_on_module(rep)) out.push_back(rep);
    return out;
}

// ---------------------------------------------------------------------------
// Homomorphisms and quotients
// ---------------------------------------------------------------------------

/// A module homomorphism over a shared base ring, as a total element map.
struct ModuleHom {
    ModulePtr src, dst;
    std::vector<int> map;

    int operator()(int m) const { return map[m]; }

    Submodule kernel() const {
        ElemSet out(src->order);
        for (int x = 0; x < src->order; ++x)
            if (map[x] == dst->zero) out.insert(x);
        return Submodule{src, out, out.items()};
    }
    Submodule image(const Submodule& n) const {
        if (n.module != src) throw input_error("hom image: submodule of a different module");
        ElemSet out(dst->order);
        for (int x : n.members.items()) out.insert(map[x]);
        return Submodule{dst, out, out.items()};
    }
    Submodule preimage(const Submodule& n) const {
        if (n.module != dst) throw input_error("hom preimage: submodule of a different module");
        ElemSet out(src->order);
        for (int x = 0; x < src->order; ++x)
            if (n.contains(map[x])) out.insert(x);
        return Submodule{src, out, out.items()};
    }
    bool is_surjective() const {
        ElemSet hit(dst->order);
        for (int v : map) hit.insert(v);
        return hit.size() == dst->order;
    }
    bool is_injective() const { return kernel().is_zero(); }
    bool is_isomorphism() const { return is_injective() && is_surjective(); }
};

inline ModuleHom make_module_hom(ModulePtr src, ModulePtr dst, std::vector<int> map) {
    if (!(src->base == dst->base)) throw input_error("module hom: different base rings");
    if (static_cast<int>(map.size()) != src->order)
        throw input_error("module hom: map must cover every source element");
    for (int v : map)
        if (v < 0 || v >= dst->order) throw input_error("module hom: image out of range");
    for (int a = 0; a < src->order; ++a)
        for (int b = 0; b < src->order; ++b)
            if (map[src->add(a, b)] != dst->add(map[a], map[b]))
                throw input_error("module hom: not additive at (" + src->name(a) + "," +
                                  src->name(b) + ")");
    if (src->base.is_integer()) {
        for (int a = 0; a < src->order; ++a)
            for (long long r = 0; r <= src->exponent; ++r)
                if (map[src->act_integer(r, a)] != dst->act_integer(r, map[a]))
                    throw input_error("module hom: not Z-linear at " + src->name(a));
    } else {
        for (int a = 0; a < src->order; ++a)
            for (int r = 0; r < src->scalar_count(); ++r)
                if (map[src->act(r, a)] != dst->act(r, map[a]))
                    throw input_error("module hom: not linear at (r=" +
                                      src->base.finite->name(r) + ", m=" + src->name(a) + ")");
    }
    return ModuleHom{std::move(src), std::move(dst), std::move(map)};
}

/// Extends generator images to a hom by additive closure. The generators
/// must span the source; conflicting relations are reported.
inline ModuleHom hom_from_generator_images(ModulePtr src, ModulePtr dst,
                                           const std::vector<int>& gens,
                                           const std::vector<int>& images) {
    if (gens.size() != images.size())
        throw input_error("module hom: generator/image count mismatch");
    std::vector<int> map(src->order, -1);
    map[src->zero] = dst->zero;
    std::vector<int> frontier{src->zero};
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (map[gens[i]] >= 0 && map[gens[i]] != images[i])
            throw input_error("module hom: inconsistent image for generator " +
                              src->name(gens[i]));
        if (map[gens[i]] < 0) {
            map[gens[i]] = images[i];
            frontier.push_back(gens[i]);
        }
    }
    auto force = [&](int s, int v) {
        if (map[s] < 0) {
            map[s] = v;
            frontier.push_back(s);
        } else if (map[s] != v) {
            throw input_error("module hom: violated relation at " + src->name(s));
        }
    };
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j)
            force(src->add(frontier[i], frontier[j]),
                  dst->add(map[frontier[i]], map[frontier[j]]));
        for (int r = 0; r < src->scalar_count(); ++r)
            force(src->act(r, frontier[i]),
                  src->base.is_integer() ? dst->act_integer(r, map[frontier[i]])
                                         : dst->act(r, map[frontier[i]]));
    }
    for (int x = 0; x < src->order; ++x)
        if (map[x] < 0)
            throw input_error("module hom: generators do not span the source module");
    return make_module_hom(std::move(src), std::move(dst), std::move(map));
}

/// Quotient M/L together with its canonical projection.
inline std::pair<ModulePtr, ModuleHom> quotient_module(const ModulePtr& base,
                                                       const Submodule& l,
                                                       const Caps& caps = default_caps()) {
    if (l.module != base) throw input_error("quotient_module: submodule of a different module");
    const FiniteModule& b = *base;
    std::vector<int> rep_of(b.order, -1);
    std::vector<int> reps;
    for (int a = 0; a < b.order; ++a) {
        if (rep_of[a] >= 0) continue;
        int rep = a;
        for (int x : l.members.items()) rep = std::min(rep, b.add(a, x));
        for (int x : l.members.items()) rep_of[b.add(a, x)] = rep;
        reps.push_back(rep);
    }
    std::sort(reps.begin(), reps.end());
    std::vector<int> index_of(b.order, -1);
    for (std::size_t i = 0; i < reps.size(); ++i) index_of[reps[i]] = static_cast<int>(i);
    auto cls = [&](int a) { return index_of[rep_of[a]]; };

    auto m = std::make_shared<FiniteModule>();
    const int n = static_cast<int>(reps.size());
    m->base = b.base;
    m->order = n;
    m->zero = cls(b.zero);
    m->add_table.resize(n * n);
    m->neg_table.resize(n);
    m->names.resize(n);
    for (int i = 0; i < n; ++i) {
        m->neg_table[i] = cls(b.neg(reps[i]));
        m->names[i] = b.name(reps[i]) + "~";
        for (int j = 0; j < n; ++j) m->add_table[i * n + j] = cls(b.add(reps[i], reps[j]));
    }
    if (b.base.is_integer()) {
        m->exponent = detail::group_exponent(*m);
        detail::fill_integer_scalar_rows(*m);
    } else {
        const int rc = m->scalar_count();
        m->scalar_table.resize(static_cast<std::size_t>(rc) * n);
        for (int r = 0; r < rc; ++r)
            for (int i = 0; i < n; ++i)
                m->scalar_table[static_cast<std::size_t>(r) * n + i] = cls(b.act(r, reps[i]));
    }
    m->cons.kind = ModuleCons::Kind::quotient;
    m->cons.m1 = base;
    m->cons.aux_gens = l.gens;
    ModulePtr q = detail::finalize_module(std::move(m), caps);
    std::vector<int> proj(b.order);
    for (int a = 0; a < b.order; ++a) proj[a] = cls(a);
    return {q, make_module_hom(base, q, std::move(proj))};
}

/// S^-1 M for an IntegerBase module: M / T_S(M) where T_S(M) collects the
/// elements killed by some product of the generators. Every generator then
/// acts invertibly on the quotient.
inline std::pair<ModulePtr, ModuleHom> localize(const ModulePtr& mod,
                                                const std::vector<long long>& s_gens,
                                                const Caps& caps = default_caps()) {
    if (!mod->base.is_integer())
        throw input_error("localize: base must be the IntegerBase");
    for (long long g : s_gens)
        if (g == 0) throw input_error("localize: 0 is not allowed in S");
    const long long e = mod->exponent;
    // Values of S modulo e: multiplicative closure of the generators.
    ElemSet svals(static_cast<int>(e));
    svals.insert(static_cast<int>(1 % e));
    for (long long g : s_gens) {
        long long gg = g % e;
        if (gg < 0) gg += e;
        svals.insert(static_cast<int>(gg));
    }
    {
        std::vector<int> elems(svals.items());
        for (std::size_t i = 0; i < elems.size(); ++i)
            for (std::size_t j = 0; j <= i; ++j) {
                int p = static_cast<int>((static_cast<long long>(elems[i]) * elems[j]) % e);
                if (svals.insert(p)) elems.push_back(p);
            }
    }
    ElemSet killed(mod->order);
    killed.insert(mod->zero);
    for (int x = 0; x < mod->order; ++x)
        for (int s : svals.items())
            if (mod->act(s == 0 ? static_cast<int>(e) : s, x) == mod->zero) {
                killed.insert(x);
                break;
            }
    Submodule ts{mod, killed, killed.items()};
    auto [q, pi] = quotient_module(mod, ts, caps);
    for (long long g : s_gens)
        if (std::gcd(g < 0 ? -g : g, q->exponent) != 1)
            throw input_error("localize: generator does not act invertibly on the quotient");
    return {q, pi};
}

/// An f-semilinear map phi: M1 -> M2 between modules over the rings joined
/// by the ring hom f; validated eagerly.
struct ModuleHomAcrossHom {
    std::shared_ptr<const RingHom> f;
    ModulePtr src, dst;  // src over f->src, dst over f->dst
    std::vector<int> map;

    int operator()(int m) const { return map[m]; }

    bool is_surjective() const {
        ElemSet hit(dst->order);
        for (int v : map) hit.insert(v);
        return hit.size() == dst->order;
    }
    bool is_injective() const {
        for (int x = 0; x < src->order; ++x)
            if (x != src->zero && map[x] == dst->zero) return false;
        return true;
    }
    bool is_isomorphism() const { return is_injective() && is_surjective(); }
};

inline std::shared_ptr<const ModuleHomAcrossHom> make_semilinear_hom(
    std::shared_ptr<const RingHom> f, ModulePtr src, ModulePtr dst, std::vector<int> map) {
    if (src->base.is_integer() || dst->base.is_integer())
        throw input_error("semilinear hom: both modules must have finite bases");
    if (src->base.finite != f->src || dst->base.finite != f->dst)
        throw input_error("semilinear hom: modules do not match the ring hom");
    if (static_cast<int>(map.size()) != src->order)
        throw input_error("semilinear hom: map must cover every source element");
    for (int a = 0; a < src->order; ++a)
        for (int b = 0; b < src->order; ++b)
            if (map[src->add(a, b)] != dst->add(map[a], map[b]))
                throw input_error("semilinear hom: not additive");
    for (int r = 0; r < src->scalar_count(); ++r)
        for (int a = 0; a < src->order; ++a)
            if (map[src->act(r, a)] != dst->act((*f)(r), map[a]))
                throw input_error("semilinear hom: phi(r.m) != f(r).phi(m) at (r=" +
                                  f->src->name(r) + ", m=" + src->name(a) + ")");
    auto h = std::make_shared<ModuleHomAcrossHom>();
    h->f = std::move(f);
    h->src = std::move(src);
    h->dst = std::move(dst);
    h->map = std::move(map);
    return h;
}

}  // namespace smlab
