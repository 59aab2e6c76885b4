#include "smlab/workspace.hpp"
#include "smlab/classify.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace smlab;

TEST_CASE("basic parsing") {
    Workspace ws = parse_workspace(
        "ring R = zn 12\n"
        "module M = cyclic 4 over R\n"
        "ring A = idealization R M\n");
    CHECK(ws.names.size() == 3);
    CHECK(ws.rings.at("R")->order == 12);
    CHECK(ws.modules.at("M")->order == 4);
    CHECK(ws.rings.at("A")->order == 48);

    Workspace empty = parse_workspace("");
    CHECK(empty.names.empty());
}

TEST_CASE("comments, caps and seed lines") {
    Workspace ws = parse_workspace(
        "# a comment\n"
        "seed 99\n"
        "ring R = zn 6\n"
        "\n"
        "ideal I = gen R 2\n");
    CHECK(ws.seed == 99);
    CHECK(ws.ideals.at("I").members.size() == 3);
}

TEST_CASE("semantic and syntax errors") {
    CHECK_THROWS_WITH(parse_workspace("ring R = zn 12\nmodule M = cyclic 5 over R\n"),
                      Catch::Matchers::ContainsSubstring("does not divide"));
    CHECK_THROWS_AS(parse_workspace("module M = cyclic 4 over R\n"), input_error);
    CHECK_THROWS_AS(parse_workspace("ring R = zn 4\nring R = zn 6\n"), input_error);
    CHECK_THROWS_AS(parse_workspace("ring R = frobnicate 4\n"), input_error);
    CHECK_THROWS_AS(parse_workspace("bogus line\n"), input_error);
}

TEST_CASE("homs and modhoms") {
    Workspace ws = parse_workspace(
        "ring R = zn 12\n"
        "ring S = zn 6\n"
        "hom f = R -> S : reduce\n"
        "module M = cyclic 12 over Z\n"
        "module Q = cyclic 6 over Z\n"
        "modhom p = M -> Q : reduce\n");
    CHECK(ws.homs.at("f")->is_surjective());
    CHECK(ws.modhoms.at("p").map[7] == 1);

    CHECK_THROWS_AS(parse_workspace("ring R = zn 12\n"
                                    "ring S = zn 6\n"
                                    "hom f = R -> S : 0 0 0 0 0 0 0 0 0 0 0 0\n"),
                    input_error);  // not unital
}

TEST_CASE("full grammar round-trips") {
    const std::string good =
        "ring R = zn 8\n"
        "ring S = zn 4\n"
        "hom f = R -> S : reduce\n"
        "ideal J = gen S 2\n"
        "ideal K = gen R 4\n"
        "ring D = dup-ring S J\n"
        "ring A = amalgam R S f J\n"
        "ring T = quotient R K\n"
        "ring P = product S S\n"
        "module M = cyclic 8 over R\n"
        "module M2 = cyclic 2 over S\n"
        "modhom p = M -> M2 : reduce\n"
        "module AM = amalgam-mod M M2 f p J\n"
        "module MD = cyclic 4 over S\n"
        "module DD = dup MD J\n"
        "submodule N = gen M 4\n"
        "module Q = quotient M N\n";
    Workspace ws = parse_workspace(good);
    CHECK(ws.rings.at("D")->order == 8);
    CHECK(ws.rings.at("A")->order == 16);
    CHECK(ws.rings.at("T")->order == 4);
    CHECK(ws.modules.at("AM")->order == 8);
    CHECK(ws.modules.at("DD")->order == 8);
    CHECK(ws.modules.at("Q")->order == 4);

    // parse -> serialize -> parse fixpoint
    std::string printed = serialize_workspace(ws);
    Workspace ws2 = parse_workspace(printed);
    CHECK(ws2.names == ws.names);
    CHECK(serialize_workspace(ws2) == printed);
    for (const auto& [name, r] : ws.rings) CHECK(ws2.rings.at(name)->order == r->order);
    for (const auto& [name, m] : ws.modules) CHECK(ws2.modules.at(name)->order == m->order);
    for (const auto& [name, n] : ws.submodules)
        CHECK(ws2.submodules.at(name).members.items() == n.members.items());
}

TEST_CASE("fragment writer output replays") {
    auto z12 = make_zn(12);
    auto m4 = make_cyclic_module(4, finite_base(z12));
    Submodule n2 = make_submodule(m4, {2});

    FragmentWriter w;
    std::string nname = w.submodule(n2);
    Workspace ws = parse_workspace(w.str());
    const Submodule& replayed = ws.submodules.at(nname);
    CHECK(replayed.module->order == 4);
    CHECK(replayed.members.items() == n2.members.items());
    // classification agrees through the replay
    CHECK(is_semi_n_submodule(replayed) == is_semi_n_submodule(n2));
    CHECK(is_n_submodule(replayed) == is_n_submodule(n2));
}

TEST_CASE("fragment writer dedupes shared structures") {
    auto z8 = make_zn(8);
    auto m8 = ring_as_module(z8);
    FragmentWriter w;
    std::string a = w.submodule(make_submodule(m8, {2}));
    std::string b = w.submodule(make_submodule(m8, {4}));
    CHECK(a != b);
    // the shared ring declaration must appear exactly once
    std::string text = w.str();
    std::size_t first = text.find("zn 8");
    REQUIRE(first != std::string::npos);
    CHECK(text.find("zn 8", first + 1) == std::string::npos);
    Workspace ws = parse_workspace(text);
    CHECK(ws.submodules.at(a).members.size() == 4);
    CHECK(ws.submodules.at(b).members.size() == 2);
}
