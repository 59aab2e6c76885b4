#pragma once

#include "smlab/constructions.hpp"

namespace smlab {

enum class CapsLevel { minimal, standard, large };

inline CapsLevel caps_level_from_name(const std::string& s) {
    if (s == "minimal") return CapsLevel::minimal;
    if (s == "standard") return CapsLevel::standard;
    if (s == "large") return CapsLevel::large;
    throw input_error("unknown caps level: " + s);
}

inline const char* caps_level_name(CapsLevel c) {
    switch (c) {
        case CapsLevel::minimal: return "minimal";
        case CapsLevel::standard: return "standard";
        case CapsLevel::large: return "large";
    }
    return "?";
}

struct IdealizationSetup {
    RingPtr base;
    ModulePtr mod;
    RingPtr ext;
};

struct DupSetup {
    RingPtr base;
    Ideal j;
    RingPtr dup;
    ModulePtr mod;   // the R-module being duplicated
    ModulePtr dmod;  // M |x| J over R |x| J
};

struct AmalgamSetup {
    std::shared_ptr<const RingHom> f;
    Ideal j;
    std::shared_ptr<const ModuleHomAcrossHom> phi;
    RingPtr amal;
    ModulePtr amod;
};

/// The deterministic instance families every theorem check quantifies over.
struct InstanceCatalog {
    CapsLevel level = CapsLevel::standard;
    Caps caps;
    std::vector<RingPtr> rings;
    std::vector<ModulePtr> modules;  // includes R-as-module for every ring
    std::vector<IdealizationSetup> idealizations;
    std::vector<DupSetup> duplications;
    std::vector<AmalgamSetup> amalgams;
    std::vector<ModuleHom> homs;
    std::vector<std::vector<long long>> loc_sets;  // S generator sets
};

inline InstanceCatalog default_catalog(CapsLevel level = CapsLevel::standard) {
    InstanceCatalog cat;
    cat.level = level;
    cat.caps = default_caps();
    const int ring_max = level == CapsLevel::minimal ? 12 : level == CapsLevel::standard ? 36 : 48;
    const int zmod_max = level == CapsLevel::minimal ? 12 : level == CapsLevel::standard ? 36 : 48;

    // Z_n for n up to the level bound.
    std::map<long long, RingPtr> zn;
    auto get_zn = [&](long long n) {
        auto it = zn.find(n);
        if (it != zn.end()) return it->second;
        return zn.emplace(n, make_zn(n, cat.caps)).first->second;
    };
    for (int n = 1; n <= ring_max; ++n) cat.rings.push_back(get_zn(n));

    if (level != CapsLevel::minimal) {
        // small products and a quotient
        cat.rings.push_back(product_ring(get_zn(2), get_zn(2), cat.caps));
        cat.rings.push_back(product_ring(get_zn(2), get_zn(4), cat.caps));
        cat.rings.push_back(product_ring(get_zn(3), get_zn(3), cat.caps));
        cat.rings.push_back(product_ring(get_zn(2), get_zn(6), cat.caps));
        cat.rings.push_back(quotient_ring(get_zn(12), make_ideal(get_zn(12), {4}), cat.caps));
    }

    // Z-modules Z_k and small products.
    std::vector<ModulePtr> zmods;
    for (int k = 1; k <= zmod_max; ++k)
        zmods.push_back(make_cyclic_module(k, integer_base(), cat.caps));
    auto zmod = [&](int k) { return zmods[k - 1]; };
    cat.modules.insert(cat.modules.end(), zmods.begin(), zmods.end());
    if (level != CapsLevel::minimal) {
        cat.modules.push_back(product_module(zmod(2), zmod(2), cat.caps));
        cat.modules.push_back(product_module(zmod(2), zmod(4), cat.caps));
        cat.modules.push_back(product_module(zmod(4), zmod(4), cat.caps));
        cat.modules.push_back(product_module(zmod(2), zmod(8), cat.caps));
        cat.modules.push_back(product_module(zmod(6), zmod(2), cat.caps));
        cat.modules.push_back(product_module(zmod(12), zmod(2), cat.caps));
        cat.modules.push_back(product_module(zmod(6), zmod(6), cat.caps));
        cat.modules.push_back(product_module(zmod(3), zmod(9), cat.caps));
    } else {
        cat.modules.push_back(product_module(zmod(2), zmod(2), cat.caps));
        cat.modules.push_back(product_module(zmod(2), zmod(4), cat.caps));
    }

    // Z_n-modules Z_k for proper divisors k of n, plus small vector spaces.
    const std::vector<int> finite_bases =
        level == CapsLevel::minimal ? std::vector<int>{4, 6, 8, 9, 12}
                                    : std::vector<int>{4, 6, 8, 9, 12, 16, 18, 20, 24, 27, 30, 36};
    for (int n : finite_bases)
        for (int k = 1; k < n; ++k)
            if (n % k == 0)
                cat.modules.push_back(make_cyclic_module(k, finite_base(get_zn(n)), cat.caps));
    {
        auto v22 = product_module(make_cyclic_module(2, finite_base(get_zn(2)), cat.caps),
                                  make_cyclic_module(2, finite_base(get_zn(2)), cat.caps), cat.caps);
        cat.modules.push_back(v22);
        cat.modules.push_back(product_module(make_cyclic_module(3, finite_base(get_zn(3)), cat.caps),
                                             make_cyclic_module(3, finite_base(get_zn(3)), cat.caps),
                                             cat.caps));
        cat.modules.push_back(product_module(make_cyclic_module(4, finite_base(get_zn(4)), cat.caps),
                                             make_cyclic_module(2, finite_base(get_zn(4)), cat.caps),
                                             cat.caps));
    }

    // Idealizations (module over the base ring must exist, k | n).
    {
        auto add_ide = [&](long long n, long long k) {
            auto base = get_zn(n);
            auto mod = make_cyclic_module(k, finite_base(base), cat.caps);
            cat.idealizations.push_back({base, mod, idealization_ring(base, mod, cat.caps)});
        };
        add_ide(4, 2);
        add_ide(4, 4);
        add_ide(2, 2);
        add_ide(3, 3);
        if (level != CapsLevel::minimal) {
            add_ide(12, 4);
            add_ide(6, 3);
            add_ide(8, 2);
            add_ide(9, 3);
            add_ide(5, 5);
        }
    }

    // Duplications.
    {
        auto add_dup = [&](long long n, int jgen, long long k) {
            auto base = get_zn(n);
            Ideal j = make_ideal(base, {jgen});
            auto dup = duplicate_ring(base, j, cat.caps);
            auto mod = make_cyclic_module(k, finite_base(base), cat.caps);
            cat.duplications.push_back({base, j, dup, mod, duplicate_module(dup, mod, j, cat.caps)});
        };
        add_dup(4, 2, 4);
        add_dup(4, 2, 2);
        add_dup(8, 4, 8);
        if (level != CapsLevel::minimal) {
            add_dup(12, 6, 12);
            add_dup(9, 3, 3);
            add_dup(6, 2, 6);
        }
    }

    // Amalgamations: a mix of J inside / outside the nilradical, zero and
    // nonzero JM2, and iso / strict-epi choices for f and phi.
    {
        auto reduce_map = [&](const ModulePtr& src, const ModulePtr& dst) {
            std::vector<int> map(src->order);
            for (int i = 0; i < src->order; ++i) map[i] = i % dst->order;
            return map;
        };
        auto add_amalg = [&](std::shared_ptr<const RingHom> f, int jgen, ModulePtr m1,
                             ModulePtr m2) {
            Ideal j = jgen < 0 ? unit_ideal(f->dst) : make_ideal(f->dst, {jgen});
            auto amal = amalgam_ring(f, j, cat.caps);
            auto phi = make_semilinear_hom(f, m1, m2, reduce_map(m1, m2));
            cat.amalgams.push_back({f, j, phi, amal, amalgam_module(amal, phi, j, cat.caps)});
        };
        auto cyc = [&](long long n, long long k) {
            return make_cyclic_module(k, finite_base(get_zn(n)), cat.caps);
        };
        add_amalg(reduce_hom(get_zn(8), get_zn(4)), 2, cyc(8, 8), cyc(4, 2));
        add_amalg(identity_hom(get_zn(4)), 2, cyc(4, 2), cyc(4, 2));
        add_amalg(identity_hom(get_zn(4)), 0, cyc(4, 4), cyc(4, 4));
        add_amalg(identity_hom(get_zn(4)), 2, cyc(4, 4), cyc(4, 2));
        add_amalg(identity_hom(get_zn(2)), -1, cyc(2, 2), cyc(2, 2));
        add_amalg(reduce_hom(get_zn(4), get_zn(2)), 0, cyc(4, 4), cyc(2, 2));
        add_amalg(identity_hom(get_zn(8)), 4, cyc(8, 2), cyc(8, 2));
        if (level != CapsLevel::minimal) {
            add_amalg(identity_hom(get_zn(6)), 3, cyc(6, 6), cyc(6, 6));
            add_amalg(reduce_hom(get_zn(12), get_zn(6)), 3, cyc(12, 12), cyc(6, 6));
            add_amalg(reduce_hom(get_zn(12), get_zn(6)), 2, cyc(12, 12), cyc(6, 3));
            add_amalg(identity_hom(get_zn(9)), 3, cyc(9, 3), cyc(9, 3));
            add_amalg(identity_hom(get_zn(8)), 2, cyc(8, 8), cyc(8, 8));
        }
    }

    // R as a module over itself, for every catalog ring and every
    // idealization / duplication / amalgam ring.
    std::vector<RingPtr> all_rings = cat.rings;
    for (const auto& s : cat.idealizations) all_rings.push_back(s.ext);
    for (const auto& s : cat.duplications) all_rings.push_back(s.dup);
    for (const auto& s : cat.amalgams) all_rings.push_back(s.amal);
    for (const auto& r : all_rings) cat.modules.push_back(ring_as_module(r, cat.caps));
    cat.rings = std::move(all_rings);

    // Module homomorphisms: identities, a unit-multiplication isomorphism,
    // and reduction epimorphisms between Z-modules.
    {
        auto add_mul_iso = [&](const ModulePtr& m, int unit) {
            std::vector<int> map(m->order);
            for (int i = 0; i < m->order; ++i) map[i] = m->act_integer(unit, i);
            cat.homs.push_back(make_module_hom(m, m, std::move(map)));
        };
        auto add_reduce = [&](const ModulePtr& src, const ModulePtr& dst) {
            std::vector<int> map(src->order);
            for (int i = 0; i < src->order; ++i) map[i] = i % dst->order;
            cat.homs.push_back(make_module_hom(src, dst, std::move(map)));
        };
        std::vector<int> ident_ks = {6, 12};
        for (int k : ident_ks) {
            const ModulePtr& m = zmod(k);
            std::vector<int> id_map(m->order);
            std::iota(id_map.begin(), id_map.end(), 0);
            cat.homs.push_back(make_module_hom(m, m, std::move(id_map)));
        }
        add_mul_iso(zmod(12), 5);
        add_mul_iso(zmod(8), 3);
        add_reduce(zmod(12), zmod(6));
        add_reduce(zmod(12), zmod(4));
        add_reduce(zmod(8), zmod(2));
        if (level != CapsLevel::minimal) {
            add_reduce(zmod(18), zmod(6));
            add_mul_iso(zmod(9), 2);
        }
    }

    cat.loc_sets = {{1}, {2}, {3}, {5}, {6}, {7}};
    return cat;
}

}  // namespace smlab
