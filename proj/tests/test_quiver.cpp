#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qha/dsl.hpp"
#include "qha/element.hpp"
#include "qha/families.hpp"
#include "qha/quiver.hpp"

#include <functional>
#include <string>

#include "support.hpp"

using namespace qha;

namespace {

ErrKind parse_kind(const std::string& text) {
    try {
        parse_presentation(text);
    } catch (const Error& e) {
        return e.kind;
    }
    FAIL("expected a parse failure");
    return ErrKind::Internal;
}

std::string parse_message(const std::string& text) {
    try {
        parse_presentation(text);
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("paths compose left to right") {
    Quiver q;
    int u = q.add_vertex("u"), v = q.add_vertex("v"), w = q.add_vertex("w");
    int a = q.add_arrow("a", u, v);
    int b = q.add_arrow("b", v, w);
    Path pa{u, {a}}, pb{v, {b}};
    CHECK(composable(q, pa, pb));
    CHECK(!composable(q, pb, pa));
    Path ab = concat(q, pa, pb);
    CHECK(ab.source() == u);
    CHECK(ab.target(q) == w);
    CHECK(ab.length() == 2);
    Path triv{v, {}};
    CHECK(concat(q, pa, triv) == pa);
    CHECK(concat(q, triv, pb) == pb);
    CHECK(path_str(q, ab) == "a b");
    CHECK(path_from_names(q, {"a", "b"}) == ab);
}

TEST_CASE("monomial order is length-first and multiplicative") {
    Quiver q;
    int v = q.add_vertex("v");
    int a = q.add_arrow("a", v, v);
    int b = q.add_arrow("b", v, v);
    Path pa{v, {a}}, pb{v, {b}}, paa{v, {a, a}};
    CHECK(path_lt(pa, pb));  // same length: lex on arrow index
    CHECK(path_lt(pb, paa)); // longer wins regardless of letters
    // p < q implies upv < uqv
    Path upav = concat(q, pb, concat(q, pa, pb));
    Path upbv = concat(q, pb, concat(q, pb, pb));
    CHECK(path_lt(upav, upbv));
    CHECK(path_cmp(pa, pa) == 0);
}

TEST_CASE("uniform elements and path algebra arithmetic") {
    Field f = qhatest::rationals();
    Quiver q;
    int v = q.add_vertex("v");
    int a = q.add_arrow("a", v, v);
    int b = q.add_arrow("b", v, v);
    PathAlgebra pa(q, f);
    FreeElement x = pa.add(pa.monomial(f.one(), Path{v, {a}}), pa.monomial(f.from_int(2), Path{v, {b}}));
    CHECK(x.terms.size() == 2);
    CHECK(x.tip().p == Path{v, {b}}); // descending order, larger monomial in front
    FreeElement xx = pa.mul(x, x);
    CHECK(xx.terms.size() == 4);
    CHECK(pa.eq(pa.sub(x, x), pa.zero()));
    CHECK(pa.eq(pa.scale(f.from_int(3), x),
                pa.add(x, pa.add(x, x))));
    int src = -1, tgt = -1;
    CHECK(pa.is_uniform(x, &src, &tgt));
    CHECK(src == v);
    CHECK(tgt == v);
    CHECK(pa.monic(pa.scale(f.from_int(5), x)).tip().c.q == 1);
}

TEST_CASE("dsl round trip on the families") {
    Field f = qhatest::rationals();
    for (const Presentation& pres :
         {build_lambda_family(f, 1, 1, 2, 1, f.one()).pres, build_gamma_star(f, 3).pres,
          build_lambda_eta(f, 1, 1, 2, 1, f.one(), f.from_int(2)).pres}) {
        std::string text = print_presentation(pres);
        Presentation back = parse_presentation(text);
        CHECK(print_presentation(back) == text); // print is idempotent
        CHECK(back.quiver.num_vertices() == pres.quiver.num_vertices());
        CHECK(back.quiver.num_arrows() == pres.quiver.num_arrows());
        CHECK(back.relations.size() == pres.relations.size());
    }
}

TEST_CASE("dsl accepts the zero-arrow point algebra") {
    Presentation p = parse_presentation(qhatest::kPoint);
    CHECK(p.quiver.num_vertices() == 1);
    CHECK(p.quiver.num_arrows() == 0);
    CHECK(p.relations.empty());
    CHECK(print_presentation(parse_presentation(print_presentation(p))) == print_presentation(p));
}

TEST_CASE("dsl comments and fractions") {
    Presentation p = parse_presentation(R"(field Q
quiver {
  vertex v;            # one vertex
  arrow x: v -> v;     # one loop
}
relations {
  x x - 2/3 x x x;     # inhomogeneous
})");
    CHECK(p.relations.size() == 1);
    CHECK(p.relations[0].el.terms.size() == 2);
}

TEST_CASE("dsl rejections carry positions and the right kind") {
    // unknown arrow
    CHECK(parse_kind("field Q\nquiver { vertex v; }\nrelations { y y; }") == ErrKind::Parse);
    CHECK(parse_message("field Q\nquiver { vertex v; }\nrelations { y y; }").find("line 3") !=
          std::string::npos);
    // non-composable product
    CHECK(parse_kind(R"(field Q
quiver {
  vertex u, v;
  arrow a: u -> v;
}
relations { a a; })") == ErrKind::Parse);
    // relation of length 1
    CHECK(parse_kind(R"(field Q
quiver {
  vertex v;
  arrow x: v -> v;
}
relations { x; })") == ErrKind::Parse);
    // non-uniform relation
    CHECK(parse_kind(R"(field Q
quiver {
  vertex u, v, w;
  arrow a: u -> v;
  arrow b: v -> w;
  arrow c: v -> u;
}
relations { a b - a c; })") == ErrKind::Parse);
    // relation cancels to zero
    CHECK(parse_kind(R"(field Q
quiver {
  vertex v;
  arrow x: v -> v;
}
relations { x x - x x; })") == ErrKind::Parse);
    // stray character
    CHECK(parse_kind("field Q\nquiver { vertex v; } %") == ErrKind::Parse);
}

TEST_CASE("dsl prime field header") {
    Presentation p = parse_presentation(R"(field F5
quiver {
  vertex v;
  arrow x: v -> v;
}
relations {
  x x - 7 x x x;
})");
    CHECK(p.field.characteristic() == 5);
    // -7 reduces to 3 mod 5; the print leads with the tip term
    CHECK(print_presentation(p).find("3 x x x + x x") != std::string::npos);
}
