#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <utility>

#include "smlab/core.hpp"

namespace smlab {

struct FiniteRing;
struct FiniteModule;
struct RingHom;

using RingPtr = std::shared_ptr<const FiniteRing>;
using ModulePtr = std::shared_ptr<const FiniteModule>;

/// How a ring was built. Carried for element naming and for serializing
/// replayable workspace fragments.
struct RingCons {
    enum class Kind { zn, product, quotient, idealization, dup_ring, amalgam_ring };
    Kind kind = Kind::zn;
    long long n = 0;  // zn
    RingPtr r1, r2;
    ModulePtr mod;                           // idealization
    std::shared_ptr<const RingHom> hom;      // amalgam
    std::vector<int> ideal_gens;             // quotient / dup / amalgam: gens of I or J
};

/// A finite commutative ring with identity. Element ids are dense
/// 0..order-1; composite constructions keep a pair decode table.
/// Immutable once built; derived sets are precomputed.
struct FiniteRing {
    int order = 0;
    int zero = 0, one = 0;
    std::vector<int> add_table, mul_table, neg_table;  // order*order / order
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> pairs;  // composite element decode; empty if atomic
    RingCons cons;

    // derived sets, filled by finalize()
    ElemSet nilradical_set;
    ElemSet units_set;
    ElemSet zdiv_set;

    int add(int a, int b) const { return add_table[a * order + b]; }
    int mul(int a, int b) const { return mul_table[a * order + b]; }
    int neg(int a) const { return neg_table[a]; }
    int sub(int a, int b) const { return add(a, neg(b)); }

    bool is_nilpotent(int a) const { return nilradical_set.contains(a); }
    bool is_unit(int a) const { return units_set.contains(a); }
    bool is_zero_divisor(int a) const { return zdiv_set.contains(a); }

    const std::string& name(int a) const { return names[a]; }

    /// Ann_R(a) = {b : ab = 0}, by direct scan.
    ElemSet ann_elem(int a) const {
        ElemSet out(order);
        for (int b = 0; b < order; ++b)
            if (mul(a, b) == zero) out.insert(b);
        return out;
    }

    bool is_field() const {
        return order >= 2 && static_cast<int>(units_set.size()) == order - 1;
    }

    // Lazy, thread-safe ideal lattice (heavily reused by the theorem suite).
    mutable std::once_flag ideals_once_;
    mutable std::vector<ElemSet> ideals_cache_;
};

/// An ideal of a finite ring: a closed member set plus the generators it
/// was closed from.
struct Ideal {
    RingPtr ring;
    ElemSet members;
    std::vector<int> gens;

    bool contains(int a) const { return members.contains(a); }
    bool is_proper() const { return members.size() < ring->order; }
    bool is_zero() const { return members.size() == 1; }
};

namespace detail {

inline void check_ring_axioms(const FiniteRing& r) {
    const int n = r.order;
    // Full scan for desk-scale orders, coarse sampling above.
    const bool full = n <= 64;
    auto bad = [&](const char* what) {
        throw input_error(std::string("ring axiom violated: ") + what);
    };
    for (int a = 0; a < n; ++a) {
        if (r.add(a, r.zero) != a) bad("additive identity");
        if (r.add(a, r.neg(a)) != r.zero) bad("additive inverse");
        if (r.mul(a, r.one) != a) bad("multiplicative identity");
    }
    const int step = full ? 1 : std::max(1, n / 17);
    for (int a = 0; a < n; a += step)
        for (int b = 0; b < n; b += step) {
            if (r.add(a, b) != r.add(b, a)) bad("addition commutativity");
            if (r.mul(a, b) != r.mul(b, a)) bad("multiplication commutativity");
            for (int c = 0; c < n; c += step) {
                if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) bad("addition associativity");
                if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) bad("multiplication associativity");
                if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) bad("distributivity");
            }
        }
}

/// Derived sets: nilradical by power scan (exponent bound = order), units
/// and zero divisors by row scan. reg(R) = units(R) in a finite commutative
/// ring; asserted here once per ring.
inline void compute_derived_sets(FiniteRing& r) {
    const int n = r.order;
    r.nilradical_set = ElemSet(n);
    r.units_set = ElemSet(n);
    r.zdiv_set = ElemSet(n);
    for (int a = 0; a < n; ++a) {
        int p = a;
        for (int k = 1; k <= n; ++k) {
            if (p == r.zero) {
                r.nilradical_set.insert(a);
                break;
            }
            p = r.mul(p, a);
        }
        bool unit = false, zdiv = false;
        for (int b = 0; b < n; ++b) {
            if (r.mul(a, b) == r.one) unit = true;
            if (b != r.zero && r.mul(a, b) == r.zero) zdiv = true;
        }
        if (unit) r.units_set.insert(a);
        if (zdiv) r.zdiv_set.insert(a);
    }
    for (int a = 0; a < n; ++a)
        if (r.units_set.contains(a) == r.zdiv_set.contains(a))
            throw input_error("reg(R) != units(R): not a finite commutative ring");
}

inline RingPtr finalize_ring(std::shared_ptr<FiniteRing> r, const Caps& caps) {
    if (r->order > caps.max_ring_order)
        throw capacity_error("ring order " + std::to_string(r->order) +
                             " exceeds cap " + std::to_string(caps.max_ring_order));
    check_ring_axioms(*r);
    compute_derived_sets(*r);
    return r;
}

}  // namespace detail

inline RingPtr make_zn(long long n, const Caps& caps = default_caps()) {
    if (n < 1) throw input_error("make_zn: n must be >= 1");
    if (n > caps.max_ring_order)
        throw capacity_error("ring order " + std::to_string(n) + " exceeds cap " +
                             std::to_string(caps.max_ring_order));
    auto r = std::make_shared<FiniteRing>();
    const int m = static_cast<int>(n);
    r->order = m;
    r->zero = 0;
    r->one = m == 1 ? 0 : 1;
    r->add_table.resize(m * m);
    r->mul_table.resize(m * m);
    r->neg_table.resize(m);
    r->names.resize(m);
    for (int a = 0; a < m; ++a) {
        r->neg_table[a] = (m - a) % m;
        r->names[a] = std::to_string(a);
        for (int b = 0; b < m; ++b) {
            r->add_table[a * m + b] = (a + b) % m;
            r->mul_table[a * m + b] = static_cast<int>((static_cast<long long>(a) * b) % m);
        }
    }
    r->cons.kind = RingCons::Kind::zn;
    r->cons.n = n;
    return detail::finalize_ring(std::move(r), caps);
}

inline RingPtr product_ring(RingPtr r1, RingPtr r2, const Caps& caps = default_caps()) {
    auto r = std::make_shared<FiniteRing>();
    const int n1 = r1->order, n2 = r2->order, n = n1 * n2;
    if (static_cast<long long>(n1) * n2 > caps.max_ring_order)
        throw capacity_error("product ring order exceeds cap " +
                             std::to_string(caps.max_ring_order));
    r->order = n;
    auto enc = [n2](int a, int b) { return a * n2 + b; };
    r->zero = enc(r1->zero, r2->zero);
    r->one = enc(r1->one, r2->one);
    r->add_table.resize(static_cast<std::size_t>(n) * n);
    r->mul_table.resize(static_cast<std::size_t>(n) * n);
    r->neg_table.resize(n);
    r->names.resize(n);
    r->pairs.resize(n);
    for (int a1 = 0; a1 < n1; ++a1)
        for (int a2 = 0; a2 < n2; ++a2) {
            int a = enc(a1, a2);
            r->pairs[a] = {a1, a2};
            r->neg_table[a] = enc(r1->neg(a1), r2->neg(a2));
            r->names[a] = "(" + r1->name(a1) + "," + r2->name(a2) + ")";
            for (int b1 = 0; b1 < n1; ++b1)
                for (int b2 = 0; b2 < n2; ++b2) {
                    int b = enc(b1, b2);
                    r->add_table[static_cast<std::size_t>(a) * n + b] =
                        enc(r1->add(a1, b1), r2->add(a2, b2));
                    r->mul_table[static_cast<std::size_t>(a) * n + b] =
                        enc(r1->mul(a1, b1), r2->mul(a2, b2));
                }
        }
    r->cons.kind = RingCons::Kind::product;
    r->cons.r1 = std::move(r1);
    r->cons.r2 = std::move(r2);
    return detail::finalize_ring(std::move(r), caps);
}

/// Closure of `gens` as an ideal: all R-multiples of the generators, then
/// additive closure.
inline ElemSet ideal_closure(const FiniteRing& ring, const std::vector<int>& gens) {
    ElemSet out(ring.order);
    out.insert(ring.zero);
    for (int g : gens)
        for (int r = 0; r < ring.order; ++r) out.insert(ring.mul(r, g));
    close_under_addition(out, [&ring](int a, int b) { return ring.add(a, b); });
    return out;
}

inline Ideal make_ideal(RingPtr ring, std::vector<int> gens) {
    for (int g : gens)
        if (g < 0 || g >= ring->order) throw input_error("ideal generator out of range");
    ElemSet members = ideal_closure(*ring, gens);
    return Ideal{std::move(ring), std::move(members), std::move(gens)};
}

inline Ideal zero_ideal(RingPtr ring) { return make_ideal(std::move(ring), {}); }
inline Ideal unit_ideal(RingPtr ring) {
    int one = ring->one;
    return make_ideal(std::move(ring), {one});
}

/// Every ideal of R exactly once: close each cyclic ideal, then close the
/// family under pairwise sums to a fixpoint.
inline const std::vector<ElemSet>& enumerate_ideal_sets(const RingPtr& ring,
                                                        const Caps& caps = default_caps()) {
    std::call_once(ring->ideals_once_, [&] {
        const FiniteRing& r = *ring;
        std::set<std::vector<int>> seen;
        std::vector<ElemSet> found;
        auto try_add = [&](const ElemSet& s) {
            if (seen.insert(s.items()).second) {
                found.push_back(s);
                if (static_cast<int>(found.size()) > caps.max_lattice)
                    throw capacity_error("ideal lattice exceeds cap " +
                                         std::to_string(caps.max_lattice));
                return true;
            }
            return false;
        };
        for (int a = 0; a < r.order; ++a) try_add(ideal_closure(r, {a}));
        // close under pairwise sums
        for (std::size_t i = 0; i < found.size(); ++i)
            for (std::size_t j = 0; j < i; ++j) {
                ElemSet sum = found[i];
                bool grew = false;
                for (int x : found[j].items()) grew |= sum.insert(x);
                if (!grew) continue;
                close_under_addition(sum, [&r](int a, int b) { return r.add(a, b); });
                try_add(sum);
            }
        std::sort(found.begin(), found.end(), [](const ElemSet& a, const ElemSet& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a.items() < b.items();
        });
        ring->ideals_cache_ = std::move(found);
    });
    return ring->ideals_cache_;
}

inline std::vector<Ideal> enumerate_ideals(const RingPtr& ring,
                                           const Caps& caps = default_caps()) {
    std::vector<Ideal> out;
    for (const ElemSet& s : enumerate_ideal_sets(ring, caps))
        out.push_back(Ideal{ring, s, s.items()});
    return out;
}

namespace detail {
inline void check_same_ring(const Ideal& i, const Ideal& j) {
    if (i.ring != j.ring) throw input_error("ideal arithmetic: mismatched owning rings");
}
}  // namespace detail

inline Ideal ideal_product(const Ideal& i, const Ideal& j) {
    detail::check_same_ring(i, j);
    const FiniteRing& r = *i.ring;
    ElemSet out(r.order);
    out.insert(r.zero);
    for (int a : i.members.items())
        for (int b : j.members.items()) out.insert(r.mul(a, b));
    close_under_addition(out, [&r](int a, int b) { return r.add(a, b); });
    return Ideal{i.ring, out, out.items()};
}

inline Ideal ideal_intersect(const Ideal& i, const Ideal& j) {
    detail::check_same_ring(i, j);
    ElemSet out = intersect(i.members, j.members);
    return Ideal{i.ring, out, out.items()};
}

/// (I : J) = {r : rJ subset of I}.
inline Ideal ideal_residual(const Ideal& i, const Ideal& j) {
    detail::check_same_ring(i, j);
    const FiniteRing& r = *i.ring;
    ElemSet out(r.order);
    for (int a = 0; a < r.order; ++a) {
        bool ok = true;
        for (int b : j.members.items())
            if (!i.members.contains(r.mul(a, b))) {
                ok = false;
                break;
            }
        if (ok) out.insert(a);
    }
    return Ideal{i.ring, out, out.items()};
}

/// Radical: {a : a^k in I for some k <= order}.
inline Ideal ideal_radical(const Ideal& i) {
    const FiniteRing& r = *i.ring;
    ElemSet out(r.order);
    for (int a = 0; a < r.order; ++a) {
        int p = a;
        for (int k = 1; k <= r.order; ++k) {
            if (i.members.contains(p)) {
                out.insert(a);
                break;
            }
            p = r.mul(p, a);
        }
    }
    return Ideal{i.ring, out, out.items()};
}

inline RingPtr quotient_ring(RingPtr base, const Ideal& ideal,
                             const Caps& caps = default_caps()) {
    if (ideal.ring != base) throw input_error("quotient_ring: ideal of a different ring");
    const FiniteRing& b = *base;
    // canonical representative of each coset: smallest member
    std::vector<int> rep_of(b.order, -1);
    std::vector<int> reps;
    for (int a = 0; a < b.order; ++a) {
        if (rep_of[a] >= 0) continue;
        int rep = a;
        for (int x : ideal.members.items()) rep = std::min(rep, b.add(a, x));
        for (int x : ideal.members.items()) rep_of[b.add(a, x)] = rep;
        reps.push_back(rep);
    }
    std::sort(reps.begin(), reps.end());
    std::vector<int> index_of(b.order, -1);
    for (std::size_t i = 0; i < reps.size(); ++i) index_of[reps[i]] = static_cast<int>(i);
    auto cls = [&](int a) { return index_of[rep_of[a]]; };

    auto r = std::make_shared<FiniteRing>();
    const int n = static_cast<int>(reps.size());
    r->order = n;
    r->zero = cls(b.zero);
    r->one = cls(b.one);
    r->add_table.resize(n * n);
    r->mul_table.resize(n * n);
    r->neg_table.resize(n);
    r->names.resize(n);
    for (int i = 0; i < n; ++i) {
        r->neg_table[i] = cls(b.neg(reps[i]));
        r->names[i] = b.name(reps[i]) + "~";
        for (int j = 0; j < n; ++j) {
            r->add_table[i * n + j] = cls(b.add(reps[i], reps[j]));
            r->mul_table[i * n + j] = cls(b.mul(reps[i], reps[j]));
        }
    }
    r->cons.kind = RingCons::Kind::quotient;
    r->cons.r1 = std::move(base);
    r->cons.ideal_gens = ideal.gens;
    return detail::finalize_ring(std::move(r), caps);
}

/// A unital ring homomorphism given by a total element map, validated eagerly.
struct RingHom {
    RingPtr src, dst;
    std::vector<int> map;

    int operator()(int a) const { return map[a]; }

    bool is_injective() const {
        std::vector<char> hit(dst->order, 0);
        for (int v : map) {
            if (hit[v]) return false;
            hit[v] = 1;
        }
        return true;
    }
    bool is_surjective() const {
        std::vector<char> hit(dst->order, 0);
        int n = 0;
        for (int v : map)
            if (!hit[v]) {
                hit[v] = 1;
                ++n;
            }
        return n == dst->order;
    }
    bool is_isomorphism() const { return is_injective() && is_surjective(); }
};

inline std::shared_ptr<const RingHom> make_ring_hom(RingPtr src, RingPtr dst,
                                                    std::vector<int> map) {
    if (static_cast<int>(map.size()) != src->order)
        throw input_error("ring hom: map must cover every source element");
    for (int v : map)
        if (v < 0 || v >= dst->order) throw input_error("ring hom: image out of range");
    if (map[src->one] != dst->one) throw input_error("ring hom: does not preserve 1");
    for (int a = 0; a < src->order; ++a)
        for (int b = 0; b < src->order; ++b) {
            if (map[src->add(a, b)] != dst->add(map[a], map[b]))
                throw input_error("ring hom: does not preserve + at (" + src->name(a) +
                                  "," + src->name(b) + ")");
            if (map[src->mul(a, b)] != dst->mul(map[a], map[b]))
                throw input_error("ring hom: does not preserve * at (" + src->name(a) +
                                  "," + src->name(b) + ")");
        }
    auto h = std::make_shared<RingHom>();
    h->src = std::move(src);
    h->dst = std::move(dst);
    h->map = std::move(map);
    return h;
}

/// Canonical reduction Z_a -> Z_b for b | a.
inline std::shared_ptr<const RingHom> reduce_hom(RingPtr src, RingPtr dst) {
    if (src->cons.kind != RingCons::Kind::zn || dst->cons.kind != RingCons::Kind::zn)
        throw input_error("reduce hom: both rings must be Z_n");
    if (src->order % dst->order != 0)
        throw input_error("reduce hom: " + std::to_string(dst->order) + " does not divide " +
                          std::to_string(src->order));
    std::vector<int> map(src->order);
    for (int a = 0; a < src->order; ++a) map[a] = a % dst->order;
    return make_ring_hom(std::move(src), std::move(dst), std::move(map));
}

inline std::shared_ptr<const RingHom> identity_hom(RingPtr r) {
    std::vector<int> map(r->order);
    std::iota(map.begin(), map.end(), 0);
    return make_ring_hom(r, r, std::move(map));
}

}  // namespace smlab
