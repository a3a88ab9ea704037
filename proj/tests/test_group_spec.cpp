#include <string>

#include "doctest.h"

#include "bdg/error.hpp"
#include "bdg/group_spec.hpp"

namespace {

std::uint64_t order_of(const std::string& spec) {
  return bdg::realize(bdg::parse_group_spec(spec)).order();
}

std::string canonical(const std::string& spec) {
  return bdg::format_group_spec(bdg::parse_group_spec(spec));
}

}  // namespace

TEST_CASE("parsing and canonical formatting") {
  CHECK(canonical("Sym(3)") == "Sym(3)");
  CHECK(canonical("  Sym ( 3 ) ") == "Sym(3)");
  CHECK(canonical("DirectProduct( Sym(3), Alt(4) )") ==
        "DirectProduct(Sym(3),Alt(4))");
  CHECK(canonical("Power(AffineFrobenius(31, 30), 2)") ==
        "Power(AffineFrobenius(31,30),2)");
  CHECK(canonical("Generators(4, \"(1,2)(3,4)\")") ==
        "Generators(4,\"(1,2)(3,4)\")");

  // Round trip: canonical text reparses to the same canonical text.
  for (const char* s :
       {"Sym(5)", "PSL2(9)", "DirectProduct(Sym(3),Sym(3))",
        "Generators(3,\"(1,2,3)\",\"(1,2)\")",
        "ExtraspecialSemidirect(7,3)"})
    CHECK(canonical(canonical(s)) == canonical(s));
}

TEST_CASE("parse errors carry position information") {
  for (const char* bad :
       {"", "Sym(", "Sym(3) trailing", "Sym(3,)", "Sym)3(", "123abc",
        "DirectProduct(Sym(3)", "Generators(4, \"(1,2)"}) {
    CHECK_THROWS_AS(bdg::parse_group_spec(bad), bdg::ParseError);
  }
}

TEST_CASE("realize orders of every constructor family") {
  CHECK(order_of("Sym(1)") == 1);
  CHECK(order_of("Sym(5)") == 120);
  CHECK(order_of("Alt(4)") == 12);
  CHECK(order_of("Alt(6)") == 360);
  CHECK(order_of("PSL2(4)") == 60);
  CHECK(order_of("PSL2(7)") == 168);
  CHECK(order_of("PSL2(9)") == 360);
  CHECK(order_of("PGL2(5)") == 120);
  CHECK(order_of("PGL2(7)") == 336);
  CHECK(order_of("SL2(3)") == 24);
  CHECK(order_of("SL2(5)") == 120);
  CHECK(order_of("SL2(9)") == 720);
  CHECK(order_of("AffineFrobenius(7,6)") == 42);
  CHECK(order_of("AffineFrobenius(31,30)") == 930);
  CHECK(order_of("AffineFrobenius(31,5)") == 155);
  CHECK(order_of("AffineFrobenius(8,7)") == 56);  // prime-power field
  CHECK(order_of("DirectProduct(Sym(3),Alt(4))") == 72);
  CHECK(order_of("Power(Sym(3),2)") == 36);
  CHECK(order_of("ExtraspecialSemidirect(7,3)") == 2058);
  CHECK(order_of("Generators(3,\"(1,2,3)\")") == 3);
  CHECK(order_of("Generators(4,\"(1,2)\",\"(1,2,3,4)\")") == 24);
}

TEST_CASE("realize validates parameters") {
  for (const char* bad : {
           "Sym(0)",                      // empty point set
           "Alt(0)",
           "PSL2(6)",                     // not a prime power
           "PGL2(1)",
           "SL2(6)",
           "AffineFrobenius(31,7)",       // 7 does not divide 30
           "AffineFrobenius(6,5)",        // 6 is not a prime power
           "AffineFrobenius(7,0)",
           "ExtraspecialSemidirect(7,4)", // r must be an odd prime
           "ExtraspecialSemidirect(5,2)", // r = 2 rejected
           "ExtraspecialSemidirect(11,3)", // 11 != 1 mod 6
           "Power(Sym(3),0)",
           "Generators(0,\"()\")",
           "Generators(4)",               // no generator strings
           "Generators(4,5)",             // generator must be quoted
           "Nonsense(3)",
           "DirectProduct(Sym(3))",       // wrong arity
       }) {
    CHECK_THROWS_AS(bdg::realize(bdg::parse_group_spec(bad)),
                    bdg::InvalidArgument);
  }
}

TEST_CASE("enumeration bound is honored by realize") {
  bdg::Group g = bdg::realize(bdg::parse_group_spec("Sym(6)"), 100);
  CHECK_THROWS_AS(g.size(), bdg::EnumerationError);
}
