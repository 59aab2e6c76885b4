#pragma once

#include "smlab/classify.hpp"

namespace smlab {

// ---------------------------------------------------------------------------
// Idealization R(+)M
// ---------------------------------------------------------------------------

/// The trivial extension R(+)M: pairs (a, x) with (a1,x1)(a2,x2) =
/// (a1 a2, a1 x2 + a2 x1). Element id = a * |M| + x.
inline RingPtr idealization_ring(RingPtr base, ModulePtr mod,
                                 const Caps& caps = default_caps()) {
    if (mod->base.is_integer() || mod->base.finite != base)
        throw input_error("idealization: module must live over the given ring");
    const FiniteRing& rb = *base;
    const FiniteModule& mb = *mod;
    auto r = std::make_shared<FiniteRing>();
    const int n = rb.order * mb.order;
    if (n > caps.max_ring_order)
        throw capacity_error("idealization order " + std::to_string(n) + " exceeds cap");
    auto enc = [&](int a, int x) { return a * mb.order + x; };
    r->order = n;
    r->zero = enc(rb.zero, mb.zero);
    r->one = enc(rb.one, mb.zero);
    r->add_table.resize(static_cast<std::size_t>(n) * n);
    r->mul_table.resize(static_cast<std::size_t>(n) * n);
    r->neg_table.resize(n);
    r->names.resize(n);
    r->pairs.resize(n);
    for (int a1 = 0; a1 < rb.order; ++a1)
        for (int x1 = 0; x1 < mb.order; ++x1) {
            const int p = enc(a1, x1);
            r->pairs[p] = {a1, x1};
            r->neg_table[p] = enc(rb.neg(a1), mb.neg(x1));
            r->names[p] = "(" + rb.name(a1) + "," + mb.name(x1) + ")";
            for (int a2 = 0; a2 < rb.order; ++a2)
                for (int x2 = 0; x2 < mb.order; ++x2) {
                    const int q = enc(a2, x2);
                    r->add_table[static_cast<std::size_t>(p) * n + q] =
                        enc(rb.add(a1, a2), mb.add(x1, x2));
                    r->mul_table[static_cast<std::size_t>(p) * n + q] =
                        enc(rb.mul(a1, a2), mb.add(mb.act(a1, x2), mb.act(a2, x1)));
                }
        }
    r->cons.kind = RingCons::Kind::idealization;
    r->cons.r1 = std::move(base);
    r->cons.mod = std::move(mod);
    return detail::finalize_ring(std::move(r), caps);
}

/// I(+)N is an ideal of R(+)M exactly when IM is contained in N.
inline bool idealization_ideal_legal(const Ideal& i, const Submodule& n) {
    ScalarSet is{finite_base(i.ring), i.members, 0};
    Submodule im = scalar_set_times(is, full_submodule(n.module));
    return im.members.subset_of(n.members);
}

/// The ideal I(+)N = {(a, x) : a in I, x in N} of the idealization.
inline Ideal idealization_ideal(const RingPtr& ext, const Ideal& i, const Submodule& n) {
    if (ext->cons.kind != RingCons::Kind::idealization || i.ring != ext->cons.r1 ||
        n.module != ext->cons.mod)
        throw input_error("idealization_ideal: mismatched idealization components");
    if (!idealization_ideal_legal(i, n))
        throw input_error("idealization_ideal: IM is not contained in N");
    const int morder = n.module->order;
    ElemSet members(ext->order);
    for (int a : i.members.items())
        for (int x : n.members.items()) members.insert(a * morder + x);
    return Ideal{ext, members, members.items()};
}

// ---------------------------------------------------------------------------
// Duplication R |x| J and M |x| J
// ---------------------------------------------------------------------------

/// R |x| J = {(a, a + j) : a in R, j in J}, a subring of R x R with
/// componentwise operations. pairs[] holds the actual (a, a + j) values.
inline RingPtr duplicate_ring(RingPtr base, const Ideal& j,
                              const Caps& caps = default_caps()) {
    if (j.ring != base) throw input_error("duplicate_ring: ideal of a different ring");
    const FiniteRing& rb = *base;
    const std::vector<int> jitems = j.members.items();
    std::vector<int> jindex(rb.order, -1);
    for (std::size_t k = 0; k < jitems.size(); ++k) jindex[jitems[k]] = static_cast<int>(k);
    const int nj = static_cast<int>(jitems.size());
    const int n = rb.order * nj;
    if (n > caps.max_ring_order)
        throw capacity_error("duplication order " + std::to_string(n) + " exceeds cap");
    auto r = std::make_shared<FiniteRing>();
    // id of the pair (a, b) with b - a in J
    auto enc = [&](int a, int b) { return a * nj + jindex[rb.sub(b, a)]; };
    r->order = n;
    r->zero = enc(rb.zero, rb.zero);
    r->one = enc(rb.one, rb.one);
    r->add_table.resize(static_cast<std::size_t>(n) * n);
    r->mul_table.resize(static_cast<std::size_t>(n) * n);
    r->neg_table.resize(n);
    r->names.resize(n);
    r->pairs.resize(n);
    for (int a1 = 0; a1 < rb.order; ++a1)
        for (int k1 = 0; k1 < nj; ++k1) {
            const int b1 = rb.add(a1, jitems[k1]);
            const int p = a1 * nj + k1;
            r->pairs[p] = {a1, b1};
            r->neg_table[p] = enc(rb.neg(a1), rb.neg(b1));
            r->names[p] = "(" + rb.name(a1) + "," + rb.name(b1) + ")";
            for (int a2 = 0; a2 < rb.order; ++a2)
                for (int k2 = 0; k2 < nj; ++k2) {
                    const int b2 = rb.add(a2, jitems[k2]);
                    const int q = a2 * nj + k2;
                    r->add_table[static_cast<std::size_t>(p) * n + q] =
                        enc(rb.add(a1, a2), rb.add(b1, b2));
                    r->mul_table[static_cast<std::size_t>(p) * n + q] =
                        enc(rb.mul(a1, a2), rb.mul(b1, b2));
                }
        }
    r->cons.kind = RingCons::Kind::dup_ring;
    r->cons.r1 = std::move(base);
    r->cons.ideal_gens = j.gens;
    return detail::finalize_ring(std::move(r), caps);
}

/// M |x| J = {(x, y) in M x M : x - y in JM} over R |x| J, with
/// (a, a+j).(x, y) = (a x, (a+j) y). pairs[] holds the (x, y) values.
inline ModulePtr duplicate_module(RingPtr dup, ModulePtr mod, const Ideal& j,
                                  const Caps& caps = default_caps()) {
    if (dup->cons.kind != RingCons::Kind::dup_ring || j.ring != dup->cons.r1 ||
        mod->base.finite != dup->cons.r1)
        throw input_error("duplicate_module: mismatched duplication components");
    const FiniteModule& mb = *mod;
    ScalarSet js{mb.base, j.members, 0};
    Submodule jm = scalar_set_times(js, full_submodule(mod));
    std::vector<int> pair_index(static_cast<std::size_t>(mb.order) * mb.order, -1);
    std::vector<std::pair<int, int>> elems;
    for (int x = 0; x < mb.order; ++x)
        for (int y = 0; y < mb.order; ++y)
            if (jm.contains(mb.sub(x, y))) {
                pair_index[static_cast<std::size_t>(x) * mb.order + y] =
                    static_cast<int>(elems.size());
                elems.emplace_back(x, y);
            }
    const int n = static_cast<int>(elems.size());
    if (n > caps.max_module_order)
        throw capacity_error("duplicated module order " + std::to_string(n) + " exceeds cap");
    auto enc = [&](int x, int y) {
        return pair_index[static_cast<std::size_t>(x) * mb.order + y];
    };
    auto m = std::make_shared<FiniteModule>();
    m->base = finite_base(dup);
    m->order = n;
    m->zero = enc(mb.zero, mb.zero);
    m->add_table.resize(static_cast<std::size_t>(n) * n);
    m->neg_table.resize(n);
    m->names.resize(n);
    m->pairs = elems;
    for (int p = 0; p < n; ++p) {
        auto [x1, y1] = elems[p];
        m->neg_table[p] = enc(mb.neg(x1), mb.neg(y1));
        m->names[p] = "(" + mb.name(x1) + "," + mb.name(y1) + ")";
        for (int q = 0; q < n; ++q)
            m->add_table[static_cast<std::size_t>(p) * n + q] =
                enc(mb.add(x1, elems[q].first), mb.add(y1, elems[q].second));
    }
    m->scalar_table.resize(static_cast<std::size_t>(dup->order) * n);
    for (int s = 0; s < dup->order; ++s) {
        auto [a, b] = dup->pairs[s];
        for (int p = 0; p < n; ++p)
            m->scalar_table[static_cast<std::size_t>(s) * n + p] =
                enc(mb.act(a, elems[p].first), mb.act(b, elems[p].second));
    }
    m->cons.kind = ModuleCons::Kind::duplication;
    m->cons.m1 = std::move(mod);
    m->cons.aux_gens = j.gens;
    return detail::finalize_module(std::move(m), caps);
}

/// N |x| J = {(x, y) in M |x| J : x in N}.
inline Submodule dup_submodule(const Submodule& n, const ModulePtr& dupmod) {
    if (dupmod->cons.kind != ModuleCons::Kind::duplication || n.module != dupmod->cons.m1)
        throw input_error("dup_submodule: mismatched duplication components");
    ElemSet members(dupmod->order);
    for (int p = 0; p < dupmod->order; ++p)
        if (n.contains(dupmod->pairs[p].first)) members.insert(p);
    return Submodule{dupmod, members, members.items()};
}

/// N-bar = {(x, y) in M |x| J : y in N}.
inline Submodule dup_submodule_bar(const Submodule& n, const ModulePtr& dupmod) {
    if (dupmod->cons.kind != ModuleCons::Kind::duplication || n.module != dupmod->cons.m1)
        throw input_error("dup_submodule_bar: mismatched duplication components");
    ElemSet members(dupmod->order);
    for (int p = 0; p < dupmod->order; ++p)
        if (n.contains(dupmod->pairs[p].second)) members.insert(p);
    return Submodule{dupmod, members, members.items()};
}

// ---------------------------------------------------------------------------
// Amalgamation R1 |x|^f J and M1 |x|^phi JM2
// ---------------------------------------------------------------------------

/// R1 |x|^f J = {(a, f(a) + j) : a in R1, j in J}, a subring of R1 x R2;
/// J is an ideal of R2 = f->dst. pairs[] holds the (a, f(a) + j) values.
inline RingPtr amalgam_ring(std::shared_ptr<const RingHom> f, const Ideal& j,
                            const Caps& caps = default_caps()) {
    if (j.ring != f->dst) throw input_error("amalgam_ring: J must be an ideal of the target");
    const FiniteRing& r1 = *f->src;
    const FiniteRing& r2 = *f->dst;
    const std::vector<int> jitems = j.members.items();
    std::vector<int> jindex(r2.order, -1);
    for (std::size_t k = 0; k < jitems.size(); ++k) jindex[jitems[k]] = static_cast<int>(k);
    const int nj = static_cast<int>(jitems.size());
    const int n = r1.order * nj;
    if (n > caps.max_ring_order)
        throw capacity_error("amalgam order " + std::to_string(n) + " exceeds cap");
    auto r = std::make_shared<FiniteRing>();
    auto enc = [&](int a, int b) { return a * nj + jindex[r2.sub(b, (*f)(a))]; };
    r->order = n;
    r->zero = enc(r1.zero, r2.zero);
    r->one = enc(r1.one, r2.one);
    r->add_table.resize(static_cast<std::size_t>(n) * n);
    r->mul_table.resize(static_cast<std::size_t>(n) * n);
    r->neg_table.resize(n);
    r->names.resize(n);
    r->pairs.resize(n);
    for (int a1 = 0; a1 < r1.order; ++a1)
        for (int k1 = 0; k1 < nj; ++k1) {
            const int b1 = r2.add((*f)(a1), jitems[k1]);
            const int p = a1 * nj + k1;
            r->pairs[p] = {a1, b1};
            r->neg_table[p] = enc(r1.neg(a1), r2.neg(b1));
            r->names[p] = "(" + r1.name(a1) + "," + r2.name(b1) + ")";
            for (int a2 = 0; a2 < r1.order; ++a2)
                for (int k2 = 0; k2 < nj; ++k2) {
                    const int b2 = r2.add((*f)(a2), jitems[k2]);
                    const int q = a2 * nj + k2;
                    r->add_table[static_cast<std::size_t>(p) * n + q] =
                        enc(r1.add(a1, a2), r2.add(b1, b2));
                    r->mul_table[static_cast<std::size_t>(p) * n + q] =
                        enc(r1.mul(a1, a2), r2.mul(b1, b2));
                }
        }
    r->cons.kind = RingCons::Kind::amalgam_ring;
    r->cons.r1 = f->src;
    r->cons.r2 = f->dst;
    r->cons.hom = std::move(f);
    r->cons.ideal_gens = j.gens;
    return detail::finalize_ring(std::move(r), caps);
}

/// M1 |x|^phi JM2 = {(x, phi(x) + y) : x in M1, y in JM2} over R1 |x|^f J,
/// with componentwise action. pairs[] holds the (x, phi(x) + y) values.
inline ModulePtr amalgam_module(RingPtr amal,
                                std::shared_ptr<const ModuleHomAcrossHom> phi,
                                const Ideal& j, const Caps& caps = default_caps()) {
    if (amal->cons.kind != RingCons::Kind::amalgam_ring || phi->f != amal->cons.hom)
        throw input_error("amalgam_module: mismatched amalgam components");
    if (j.ring != phi->f->dst)
        throw input_error("amalgam_module: J must be an ideal of the target ring");
    const FiniteModule& m1 = *phi->src;
    const FiniteModule& m2 = *phi->dst;
    ScalarSet js{m2.base, j.members, 0};
    Submodule jm2 = scalar_set_times(js, full_submodule(phi->dst));
    const std::vector<int> jm_items = jm2.members.items();
    std::vector<int> jm_index(m2.order, -1);
    for (std::size_t k = 0; k < jm_items.size(); ++k)
        jm_index[jm_items[k]] = static_cast<int>(k);
    const int njm = static_cast<int>(jm_items.size());
    const int n = m1.order * njm;
    if (n > caps.max_module_order)
        throw capacity_error("amalgamated module order " + std::to_string(n) + " exceeds cap");
    auto m = std::make_shared<FiniteModule>();
    // id of the pair (x, z) with z - phi(x) in JM2
    auto enc = [&](int x, int z) { return x * njm + jm_index[m2.sub(z, (*phi)(x))]; };
    m->base = finite_base(amal);
    m->order = n;
    m->zero = enc(m1.zero, m2.zero);
    m->add_table.resize(static_cast<std::size_t>(n) * n);
    m->neg_table.resize(n);
    m->names.resize(n);
    m->pairs.resize(n);
    for (int x1 = 0; x1 < m1.order; ++x1)
        for (int k1 = 0; k1 < njm; ++k1) {
            const int z1 = m2.add((*phi)(x1), jm_items[k1]);
            const int p = x1 * njm + k1;
            m->pairs[p] = {x1, z1};
            m->neg_table[p] = enc(m1.neg(x1), m2.neg(z1));
            m->names[p] = "(" + m1.name(x1) + "," + m2.name(z1) + ")";
            for (int x2 = 0; x2 < m1.order; ++x2)
                for (int k2 = 0; k2 < njm; ++k2) {
                    const int z2 = m2.add((*phi)(x2), jm_items[k2]);
                    m->add_table[static_cast<std::size_t>(p) * n + (x2 * njm + k2)] =
                        enc(m1.add(x1, x2), m2.add(z1, z2));
                }
        }
    m->scalar_table.resize(static_cast<std::size_t>(amal->order) * n);
    for (int s = 0; s < amal->order; ++s) {
        auto [a, b] = amal->pairs[s];
        for (int p = 0; p < n; ++p)
            m->scalar_table[static_cast<std::size_t>(s) * n + p] =
                enc(m1.act(a, m->pairs[p].first), m2.act(b, m->pairs[p].second));
    }
    m->cons.kind = ModuleCons::Kind::amalgam_module;
    m->cons.m1 = phi->src;
    m->cons.m2 = phi->dst;
    m->cons.f = phi->f;
    m->cons.phi = std::move(phi);
    m->cons.aux_gens = j.gens;
    return detail::finalize_module(std::move(m), caps);
}

/// N1 |x|^phi JM2: the elements whose first component lies in N1.
inline Submodule amalgam_submodule_first(const Submodule& n1, const ModulePtr& amod) {
    if (amod->cons.kind != ModuleCons::Kind::amalgam_module || n1.module != amod->cons.m1)
        throw input_error("amalgam_submodule_first: mismatched components");
    ElemSet members(amod->order);
    for (int p = 0; p < amod->order; ++p)
        if (n1.contains(amod->pairs[p].first)) members.insert(p);
    return Submodule{amod, members, members.items()};
}

/// N2-bar^phi: the elements whose second component lies in N2.
inline Submodule amalgam_submodule_second(const Submodule& n2, const ModulePtr& amod) {
    if (amod->cons.kind != ModuleCons::Kind::amalgam_module || n2.module != amod->cons.m2)
        throw input_error("amalgam_submodule_second: mismatched components");
    ElemSet members(amod->order);
    for (int p = 0; p < amod->order; ++p)
        if (n2.contains(amod->pairs[p].second)) members.insert(p);
    return Submodule{amod, members, members.items()};
}

}  // namespace smlab
