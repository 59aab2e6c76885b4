#pragma once

#include <cstdint>
#include <sstream>

#include "smlab/catalog.hpp"

namespace smlab {

/// A parsed workspace: named algebraic objects built from a line-oriented
/// declaration file. Declarations are kept in order for round-tripping.
struct Workspace {
    Caps caps = default_caps();
    std::uint64_t seed = 0;

    std::vector<std::string> names;  // declaration order
    std::map<std::string, RingPtr> rings;
    std::map<std::string, ModulePtr> modules;
    std::map<std::string, Ideal> ideals;
    std::map<std::string, Submodule> submodules;
    std::map<std::string, std::shared_ptr<const RingHom>> homs;

    struct ModHomDecl {
        ModulePtr src, dst;
        std::vector<int> map;
    };
    std::map<std::string, ModHomDecl> modhoms;

    // normalized declaration lines, for serialization
    std::vector<std::string> lines;

    bool has_name(const std::string& n) const {
        return rings.count(n) || modules.count(n) || ideals.count(n) ||
               submodules.count(n) || homs.count(n) || modhoms.count(n);
    }
};

namespace detail {

inline std::vector<std::string> tokenize_line(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream in(line);
    std::string t;
    while (in >> t) {
        if (t[0] == '#') break;
        toks.push_back(t);
    }
    return toks;
}

inline long long parse_int(const std::string& tok, int lineno) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw input_error("line " + std::to_string(lineno) + ": expected an integer, got '" +
                          tok + "'");
    }
}

}  // namespace detail

inline Workspace parse_workspace(const std::string& text) {
    Workspace ws;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    auto fail = [&](const std::string& msg) -> void {
        throw input_error("line " + std::to_string(lineno) + ": " + msg);
    };
    auto expect_ring = [&](const std::string& n) -> RingPtr {
        auto it = ws.rings.find(n);
        if (it == ws.rings.end()) fail("unknown ring '" + n + "'");
        return it->second;
    };
    auto expect_module = [&](const std::string& n) -> ModulePtr {
        auto it = ws.modules.find(n);
        if (it == ws.modules.end()) fail("unknown module '" + n + "'");
        return it->second;
    };
    while (std::getline(in, raw)) {
        ++lineno;
        std::vector<std::string> t = detail::tokenize_line(raw);
        if (t.empty()) continue;
        const std::string& kind = t[0];
        if (kind == "caps") {
            if (t.size() != 2) fail("usage: caps minimal|standard|large");
            caps_level_from_name(t[1]);  // validates
            ws.lines.push_back("caps " + t[1]);
            continue;
        }
        if (kind == "seed") {
            if (t.size() != 2) fail("usage: seed <u64>");
            ws.seed = static_cast<std::uint64_t>(detail::parse_int(t[1], lineno));
            ws.lines.push_back("seed " + t[1]);
            continue;
        }
        if (t.size() < 4 || t[2] != "=") fail("expected '<kind> <name> = ...'");
        const std::string& name = t[1];
        if (ws.has_name(name)) fail("duplicate name '" + name + "'");
        std::vector<std::string> a(t.begin() + 3, t.end());  // right-hand side
        try {
            if (kind == "ring") {
                RingPtr r;
                if (a[0] == "zn" && a.size() == 2) {
                    r = make_zn(detail::parse_int(a[1], lineno), ws.caps);
                } else if (a[0] == "product" && a.size() == 3) {
                    r = product_ring(expect_ring(a[1]), expect_ring(a[2]), ws.caps);
                } else if (a[0] == "quotient" && a.size() == 3) {
                    auto it = ws.ideals.find(a[2]);
                    if (it == ws.ideals.end()) fail("unknown ideal '" + a[2] + "'");
                    r = quotient_ring(expect_ring(a[1]), it->second, ws.caps);
                } else if (a[0] == "idealization" && a.size() == 3) {
                    r = idealization_ring(expect_ring(a[1]), expect_module(a[2]), ws.caps);
                } else if (a[0] == "dup-ring" && a.size() == 3) {
                    auto it = ws.ideals.find(a[2]);
                    if (it == ws.ideals.end()) fail("unknown ideal '" + a[2] + "'");
                    r = duplicate_ring(expect_ring(a[1]), it->second, ws.caps);
                } else if (a[0] == "amalgam" && a.size() == 5) {
                    expect_ring(a[1]);
                    expect_ring(a[2]);
                    auto hit = ws.homs.find(a[3]);
                    if (hit == ws.homs.end()) fail("unknown hom '" + a[3] + "'");
                    auto iit = ws.ideals.find(a[4]);
                    if (iit == ws.ideals.end()) fail("unknown ideal '" + a[4] + "'");
                    if (hit->second->src != ws.rings[a[1]] || hit->second->dst != ws.rings[a[2]])
                        fail("hom '" + a[3] + "' does not join '" + a[1] + "' to '" + a[2] + "'");
                    r = amalgam_ring(hit->second, iit->second, ws.caps);
                } else {
                    fail("unknown ring form '" + a[0] + "'");
                }
                ws.rings.emplace(name, std::move(r));
            } else if (kind == "module") {
                ModulePtr m;
                if (a[0] == "cyclic" && a.size() == 4 && a[2] == "over") {
                    long long k = detail::parse_int(a[1], lineno);
                    BaseRing base = a[3] == "Z" ? integer_base() : finite_base(expect_ring(a[3]));
                    m = make_cyclic_module(k, base, ws.caps);
                } else if (a[0] == "product" && a.size() == 3) {
                    m = product_module(expect_module(a[1]), expect_module(a[2]), ws.caps);
                } else if (a[0] == "quotient" && a.size() == 3) {
                    auto it = ws.submodules.find(a[2]);
                    if (it == ws.submodules.end()) fail("unknown submodule '" + a[2] + "'");
                    m = quotient_module(expect_module(a[1]), it->second, ws.caps).first;
                } else if (a[0] == "dup" && a.size() == 3) {
                    ModulePtr base_mod = expect_module(a[1]);
                    auto it = ws.ideals.find(a[2]);
                    if (it == ws.ideals.end()) fail("unknown ideal '" + a[2] + "'");
                    RingPtr dup = duplicate_ring(it->second.ring, it->second, ws.caps);
                    m = duplicate_module(dup, base_mod, it->second, ws.caps);
                } else if (a[0] == "amalgam-mod" && a.size() == 6) {
                    ModulePtr m1 = expect_module(a[1]);
                    ModulePtr m2 = expect_module(a[2]);
                    auto hit = ws.homs.find(a[3]);
                    if (hit == ws.homs.end()) fail("unknown hom '" + a[3] + "'");
                    auto pit = ws.modhoms.find(a[4]);
                    if (pit == ws.modhoms.end()) fail("unknown modhom '" + a[4] + "'");
                    auto iit = ws.ideals.find(a[5]);
                    if (iit == ws.ideals.end()) fail("unknown ideal '" + a[5] + "'");
                    if (pit->second.src != m1 || pit->second.dst != m2)
                        fail("modhom '" + a[4] + "' does not join '" + a[1] + "' to '" + a[2] + "'");
                    auto phi = make_semilinear_hom(hit->second, m1, m2, pit->second.map);
                    RingPtr amal = amalgam_ring(hit->second, iit->second, ws.caps);
                    m = amalgam_module(amal, phi, iit->second, ws.caps);
                } else {
                    fail("unknown module form '" + a[0] + "'");
                }
                ws.modules.emplace(name, std::move(m));
            } else if (kind == "ideal") {
                if (a.size() < 2 || a[0] != "gen") fail("usage: ideal <name> = gen <ring> e1 ...");
                RingPtr r = expect_ring(a[1]);
                std::vector<int> gens;
                for (std::size_t i = 2; i < a.size(); ++i)
                    gens.push_back(static_cast<int>(detail::parse_int(a[i], lineno)));
                ws.ideals.emplace(name, make_ideal(r, std::move(gens)));
            } else if (kind == "submodule") {
                if (a.size() < 2 || a[0] != "gen")
                    fail("usage: submodule <name> = gen <module> e1 ...");
                ModulePtr m = expect_module(a[1]);
                std::vector<int> gens;
                for (std::size_t i = 2; i < a.size(); ++i)
                    gens.push_back(static_cast<int>(detail::parse_int(a[i], lineno)));
                ws.submodules.emplace(name, make_submodule(m, std::move(gens)));
            } else if (kind == "hom") {
                // hom <name> = <ring> -> <ring> : i1 ... | reduce
                if (a.size() < 5 || a[1] != "->" || a[3] != ":")
                    fail("usage: hom <name> = <ring> -> <ring> : i1 ... | reduce");
                RingPtr src = expect_ring(a[0]), dst = expect_ring(a[2]);
                std::shared_ptr<const RingHom> h;
                if (a.size() == 5 && a[4] == "reduce") {
                    h = reduce_hom(src, dst);
                } else {
                    std::vector<int> map;
                    for (std::size_t i = 4; i < a.size(); ++i)
                        map.push_back(static_cast<int>(detail::parse_int(a[i], lineno)));
                    h = make_ring_hom(src, dst, std::move(map));
                }
                ws.homs.emplace(name, std::move(h));
            } else if (kind == "modhom") {
                if (a.size() < 5 || a[1] != "->" || a[3] != ":")
                    fail("usage: modhom <name> = <module> -> <module> : i1 ... | reduce");
                ModulePtr src = expect_module(a[0]), dst = expect_module(a[2]);
                std::vector<int> map;
                if (a.size() == 5 && a[4] == "reduce") {
                    if (dst->order == 0 || src->order % dst->order != 0)
                        fail("reduce modhom needs |dst| dividing |src|");
                    map.resize(src->order);
                    for (int i = 0; i < src->order; ++i) map[i] = i % dst->order;
                } else {
                    for (std::size_t i = 4; i < a.size(); ++i)
                        map.push_back(static_cast<int>(detail::parse_int(a[i], lineno)));
                }
                if (static_cast<int>(map.size()) != src->order)
                    fail("modhom map must cover every source element");
                // well-formedness: additive always; linearity when bases agree
                // (amalgam use validates semilinearity at the use site)
                for (int x = 0; x < src->order; ++x)
                    for (int y = 0; y < src->order; ++y)
                        if (map[src->add(x, y)] != dst->add(map[x], map[y]))
                            fail("modhom is not additive at (" + src->name(x) + "," +
                                 src->name(y) + ")");
                ws.modhoms.emplace(name, Workspace::ModHomDecl{src, dst, std::move(map)});
            } else {
                fail("unknown declaration kind '" + kind + "'");
            }
        } catch (const input_error& e) {
            std::string msg = e.what();
            if (msg.rfind("line ", 0) == 0) throw;
            fail(std::string("in '") + name + "': " + msg);
        }
        ws.names.push_back(name);
        std::string norm = kind + " " + name + " =";
        for (const std::string& x : a) norm += " " + x;
        ws.lines.push_back(norm);
    }
    return ws;
}

inline std::string serialize_workspace(const Workspace& ws) {
    std::string out;
    for (const std::string& l : ws.lines) out += l + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Witness fragments: serialize catalog-built objects back into workspace
// declarations so every reported witness can be replayed.
// ---------------------------------------------------------------------------

/// Emits declarations for rings/modules/homs into `out`, reusing names for
/// shared subobjects. Returns the name of the object.
class FragmentWriter {
  public:
    std::string ring(const RingPtr& r) {
        auto it = ring_names_.find(r.get());
        if (it != ring_names_.end()) return it->second;
        std::string name = fresh("R");
        const RingCons& c = r->cons;
        switch (c.kind) {
            case RingCons::Kind::zn:
                line("ring " + name + " = zn " + std::to_string(c.n));
                break;
            case RingCons::Kind::product:
                line("ring " + name + " = product " + ring(c.r1) + " " + ring(c.r2));
                break;
            case RingCons::Kind::quotient: {
                std::string in = ideal(c.r1, c.ideal_gens);
                line("ring " + name + " = quotient " + ring(c.r1) + " " + in);
                break;
            }
            case RingCons::Kind::idealization:
                line("ring " + name + " = idealization " + ring(c.r1) + " " + module(c.mod));
                break;
            case RingCons::Kind::dup_ring: {
                std::string in = ideal(c.r1, c.ideal_gens);
                line("ring " + name + " = dup-ring " + ring(c.r1) + " " + in);
                break;
            }
            case RingCons::Kind::amalgam_ring: {
                std::string hn = hom(c.hom);
                std::string in = ideal(c.r2, c.ideal_gens);
                line("ring " + name + " = amalgam " + ring(c.r1) + " " + ring(c.r2) + " " + hn +
                     " " + in);
                break;
            }
        }
        ring_names_[r.get()] = name;
        return name;
    }

    std::string module(const ModulePtr& m) {
        auto it = module_names_.find(m.get());
        if (it != module_names_.end()) return it->second;
        std::string name = fresh("M");
        const ModuleCons& c = m->cons;
        switch (c.kind) {
            case ModuleCons::Kind::cyclic:
                line("module " + name + " = cyclic " + std::to_string(c.k) + " over " +
                     (m->base.is_integer() ? std::string("Z") : ring(m->base.finite)));
                break;
            case ModuleCons::Kind::product:
                line("module " + name + " = product " + module(c.m1) + " " + module(c.m2));
                break;
            case ModuleCons::Kind::quotient: {
                std::string sn = submodule_gens(c.m1, c.aux_gens);
                line("module " + name + " = quotient " + module(c.m1) + " " + sn);
                break;
            }
            case ModuleCons::Kind::duplication: {
                std::string in = ideal(c.m1->base.finite, c.aux_gens);
                line("module " + name + " = dup " + module(c.m1) + " " + in);
                break;
            }
            case ModuleCons::Kind::amalgam_module: {
                std::string hn = hom(c.f);
                std::string pn = modhom(c.phi);
                std::string in = ideal(c.f->dst, c.aux_gens);
                line("module " + name + " = amalgam-mod " + module(c.m1) + " " + module(c.m2) +
                     " " + hn + " " + pn + " " + in);
                break;
            }
            case ModuleCons::Kind::ring_as_module: {
                if (c.ring_src->cons.kind == RingCons::Kind::zn) {
                    line("module " + name + " = cyclic " + std::to_string(c.ring_src->cons.n) +
                         " over " + ring(c.ring_src));
                } else {
                    // no grammar form for a general ring over itself
                    line("# module " + name + ": ring " + ring(c.ring_src) +
                         " viewed as a module over itself");
                }
                break;
            }
        }
        module_names_[m.get()] = name;
        return name;
    }

    std::string ideal(const RingPtr& r, const std::vector<int>& gens) {
        std::string name = fresh("I");
        std::string l = "ideal " + name + " = gen " + ring(r);
        for (int g : gens) l += " " + std::to_string(g);
        line(l);
        return name;
    }

    std::string submodule_gens(const ModulePtr& m, const std::vector<int>& gens) {
        std::string name = fresh("N");
        std::string l = "submodule " + name + " = gen " + module(m);
        for (int g : gens) l += " " + std::to_string(g);
        line(l);
        return name;
    }

    std::string submodule(const Submodule& n) { return submodule_gens(n.module, n.gens); }

    std::string hom(const std::shared_ptr<const RingHom>& f) {
        auto it = hom_names_.find(f.get());
        if (it != hom_names_.end()) return it->second;
        std::string name = fresh("f");
        std::string l = "hom " + name + " = " + ring(f->src) + " -> " + ring(f->dst) + " :";
        for (int v : f->map) l += " " + std::to_string(v);
        line(l);
        hom_names_[f.get()] = name;
        return name;
    }

    std::string modhom(const std::shared_ptr<const ModuleHomAcrossHom>& phi) {
        auto it = modhom_names_.find(phi.get());
        if (it != modhom_names_.end()) return it->second;
        std::string name = fresh("p");
        std::string l = "modhom " + name + " = " + module(phi->src) + " -> " + module(phi->dst) +
                        " :";
        for (int v : phi->map) l += " " + std::to_string(v);
        line(l);
        modhom_names_[phi.get()] = name;
        return name;
    }

    void note(const std::string& text) { line("# " + text); }

    std::string str() const { return text_; }

  private:
    std::string fresh(const char* prefix) { return std::string(prefix) + std::to_string(++n_); }
    void line(const std::string& l) { text_ += l + "\n"; }

    int n_ = 0;
    std::string text_;
    std::map<const void*, std::string> ring_names_;
    std::map<const void*, std::string> module_names_;
    std::map<const void*, std::string> hom_names_;
    std::map<const void*, std::string> modhom_names_;
};

}  // namespace smlab
