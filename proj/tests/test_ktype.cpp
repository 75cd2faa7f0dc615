#include <doctest.h>

#include "ktf/ktype.hpp"
#include "ktf/params.hpp"
#include "require.hpp"

using namespace ktf;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

}  // namespace

TEST_SUITE("ktype") {
  TEST_CASE("param_class_examples") {
    CHECK(param_class(q(3), 4).tag == SetTag::I0plus);
    CHECK(param_class(q(1), 4).tag == SetTag::J0);
    CHECK(param_class(q(0), 7).tag == SetTag::Empty);
    CHECK(param_class(q(1, 3), 4).tag == SetTag::Generic);
    CHECK(enumerate(ParamSet::I3, 7) == std::vector<long>{-6, -2, 2, 6});
    CHECK(enumerate(ParamSet::I3, 6).empty());
  }

  TEST_CASE("sigma_member_examples") {
    CHECK(sigma_member(Irr::pm, q(3), 8).member);
    const auto h = sigma_member(Irr::H, q(0), 3);
    CHECK_FALSE(h.member);
    CHECK(h.literal);
    CHECK(h.discrepancy);
    CHECK(sigma_member(Irr::H, q(0), 5).member);
    CHECK_FALSE(sigma_member(Irr::H, q(0), 5).discrepancy);
  }

  TEST_CASE("degree_list_examples") {
    CHECK(ktype_degrees(Irr::pp, q(1, 3), 12).degrees == std::vector<long>{0, 4, 8, 12});
    CHECK(ktype_degrees(Irr::H, q(0), 13).degrees == std::vector<long>{1, 5, 9, 13});
    CHECK(ktype_degrees(Irr::pm, q(-1), 14).degrees == std::vector<long>{2, 6, 10, 14});
    CHECK(ktype_degrees(Irr::mm, q(5), 10).degrees == std::vector<long>{2, 6, 10});
    CHECK(ktype_degrees(Irr::pm, q(1), 14).degrees.empty());
    const auto spins = ktype_degrees(Irr::H, q(0), 5).spins;
    CHECK(spins == std::vector<Rational>{q(1, 2), q(5, 2)});
  }

  TEST_CASE("crosscheck_examples") {
    CHECK(ktype_crosscheck(Irr::pp, q(2), 16).all_agree());
    const auto h = ktype_crosscheck(Irr::H, q(2), 15);
    CHECK(h.all_agree());
    CHECK(ktype_degrees(Irr::H, q(2), 15).degrees == std::vector<long>{3, 7, 11, 15});
    const auto mp = ktype_crosscheck(Irr::mp, q(1), 14);
    CHECK(mp.all_agree());
    CHECK(ktype_degrees(Irr::mp, q(1), 14).degrees == std::vector<long>{2, 6, 10, 14});
    const auto h0 = ktype_crosscheck(Irr::H, q(0), 9);
    CHECK(h0.all_agree());
    CHECK(h0.discrepancies() == std::vector<long>{3, 7});
  }

  TEST_CASE("predicted_degrees_match_hom") {
    for (Irr sigma : all_irr())
      for (long s = -5; s <= 5; ++s) {
        const auto cc = ktype_crosscheck(sigma, Rational(s), 11);
        CHECK_MESSAGE(cc.all_agree(), to_string(sigma) << " s=" << s);
        for (const auto& row : cc.rows) CHECK((row.hom == 0 || row.hom == 1));
      }
  }

  TEST_CASE("ktype_checks_small_range") {
    testgen::require_pass(checks::ktype_lists(6, 12));
    testgen::require_pass(checks::h_literal_discrepancy(6, 12));
    testgen::require_pass(checks::ktype_model_independence(4, 10));
  }
}
