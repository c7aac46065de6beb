#include "fibo/boards.hpp"

#include <doctest.h>

using namespace fibo;

TEST_CASE("board parsing and validation") {
  CHECK(parse_board("B(4)").heights == staircase(4).heights);
  CHECK(staircase(4).heights == std::vector<int>{0, 1, 2, 3});
  CHECK(parse_board("F(1,2,2)").heights == std::vector<int>{1, 2, 2});
  CHECK_THROWS(parse_board("F(2,1)")); // heights must weakly increase
  CHECK_THROWS(parse_board("F()"));
  CHECK_THROWS(parse_board("G(1)"));
  FerrersBoard b{{1, 2, 5}};
  CHECK(b.is_ferrers());
  CHECK(b.fib_sum(3) == 1 + 1 + 5);
  CHECK(b.to_string() == "F(1,2,5)");
}

TEST_CASE("file polynomials on F(1,2) by hand") {
  FerrersBoard b{{1, 2}};
  // Barred weights sum q^rank over the tiled columns only.
  CHECK(file_poly(b, 0, true) == QPoly(1));
  CHECK(file_poly(b, 1, true) == QPoly(2));
  CHECK(file_poly(b, 2, true) == QPoly(1));
  // Unbarred weights add q^{F_{b_i}} for every untiled column.
  CHECK(file_poly(b, 0, false) == QPoly::monomial(1, 2));
  CHECK(file_poly(b, 1, false) == QPoly::monomial(2, 1));
  CHECK(file_poly(b, 2, false) == QPoly(1));
}

TEST_CASE("single-column selections on the staircase of size 4") {
  FerrersBoard b4 = staircase(4);
  CHECK(file_poly(b4, 1, true) ==
        QPoly(std::vector<Int>{Int(3), Int(1)})); // 3 + q
  CHECK(rook_poly(b4, 1, true) == QPoly(std::vector<Int>{Int(3), Int(1)}));
}

TEST_CASE("file enumeration agrees with recursion and z-product") {
  for (const char* text : {"B(5)", "F(1,2,3)", "F(2,2,4)", "F(1,1,1,1)"}) {
    FerrersBoard b = parse_board(text);
    for (int k = 0; k <= b.size(); ++k)
      for (bool barred : {false, true}) {
        QPoly direct = file_poly(b, k, barred);
        CHECK(direct == file_poly_rec(b, k, barred));
        CHECK(direct == file_poly_z(b.heights, k, barred));
      }
  }
}

TEST_CASE("rook enumeration agrees with recursion and the shift relation") {
  for (const char* text : {"B(5)", "F(1,2,3)", "F(2,2,4)", "F(1,3,5)"}) {
    FerrersBoard b = parse_board(text);
    for (int k = 0; k <= b.size(); ++k) {
      for (bool barred : {false, true})
        CHECK(rook_poly(b, k, barred) == rook_poly_rec(b, k, barred));
      CHECK(rel_check(b, k));
      CHECK(rook_poly(b, k, false) ==
            rook_poly(b, k, true)
                .shifted(static_cast<std::size_t>(b.fib_sum(b.size() - k))));
    }
  }
}

TEST_CASE("rook placements on F(1,2) by hand") {
  FerrersBoard b{{1, 2}};
  // With both columns tiled the second column is cancelled down to height 1.
  CHECK(rook_poly(b, 2, true) == QPoly(1));
  CHECK(rook_poly(b, 1, true) == QPoly(2));
  CHECK(rook_poly(b, 1, false) == QPoly::monomial(2, 1));
  CHECK(rook_poly(b, 0, false) == QPoly::monomial(1, 2));
}

TEST_CASE("effective heights and the cancellation simulator") {
  FerrersBoard b{{2, 3, 4}};
  CHECK(effective_height(b, 0, 0) == 2);
  CHECK(effective_height(b, 2, 1) == 3);
  CHECK(effective_height(b, 2, 2) == 2);

  CancellationResult r = simulate_cancellation(staircase(4), {1, 3});
  CHECK(r.untiled_heights == std::vector<int>{0, 1});
  CHECK(r.tiled_heights == std::vector<int>{1, 2});
}

TEST_CASE("mixed sums match the column products") {
  for (const char* text : {"F(1,2)", "F(1,2,3)", "B(4)"}) {
    FerrersBoard b = parse_board(text);
    for (int x = 1; x <= 3; ++x) {
      QPoly unbarred(1), barred(1);
      for (int h : b.heights) {
        unbarred *= qbracket(x + fib(h));
        barred *= qbracket(x) + qbracket(fib(h));
      }
      CHECK(mixed_file_sum(b, x, false) == unbarred);
      CHECK(mixed_file_sum(b, x, true) == barred);
      CHECK(mixed_aug_sum(b, x) == pow(qbracket(x), static_cast<unsigned>(b.size())));
      CHECK(rook_product_check(b, x));
    }
  }
}

TEST_CASE("unbarred rook product hypothesis") {
  FerrersBoard b{{1, 2, 4}};
  CHECK(unbarred_product_applicable(b, 3));  // x = F_4 = 3
  CHECK_FALSE(unbarred_product_applicable(b, 2));
}

TEST_CASE("placement rendering is stable") {
  FerrersBoard b{{1, 2}};
  auto fp = file_placements(b, 1);
  REQUIRE(!fp.empty());
  std::string s = placement_to_string(fp.front(), b);
  CHECK(s.find("col=") != std::string::npos);
  CHECK(s.find("rank=") != std::string::npos);
}
