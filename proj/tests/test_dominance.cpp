#include <doctest.h>

#include "corpus.hpp"
#include "ringnc/dominance.hpp"
#include "ringnc/error.hpp"

using namespace ringnc;

namespace {

PartitionRing PR(std::uint64_t p, std::initializer_list<unsigned> parts) {
  PartitionRing r;
  r.assignment.emplace(p, Partition(std::vector<unsigned>(parts)));
  return r;
}

Relation rel(const char* s, const char* r) {
  auto v = catalog_dominates(parse_ring(s), parse_ring(r));
  auto bad = check_certificate(v);
  CHECK_MESSAGE(!bad, bad.value_or(""));
  return v.relation;
}

// All partition rings of size 2^a 3^b (a, b <= limits), exponent 0 meaning absent.
std::vector<PartitionRing> assignments(unsigned a, unsigned b) {
  std::vector<PartitionRing> out;
  std::vector<Partition> pa, pb;
  if (a > 0) pa = enumerate_partitions(a);
  if (b > 0) pb = enumerate_partitions(b);
  if (a > 0 && b > 0) {
    for (const auto& x : pa) {
      for (const auto& y : pb) {
        PartitionRing r;
        r.assignment.emplace(2, x);
        r.assignment.emplace(3, y);
        out.push_back(r);
      }
    }
  } else if (a > 0) {
    for (const auto& x : pa) out.push_back(PartitionRing{{{2, x}}});
  } else {
    for (const auto& y : pb) out.push_back(PartitionRing{{{3, y}}});
  }
  return out;
}

}  // namespace

TEST_CASE("partition rings") {
  auto r = to_partition_ring({{2, 2}, {2, 2}, {2, 1}, {3, 2}, {3, 1}});
  CHECK(to_string(r) == "GF(2^2)xGF(2^2)xGF(2)xGF(3^2)xGF(3)");
  CHECK(r.assignment.at(2) == Partition({2, 2, 1}));
  CHECK(r.assignment.at(3) == Partition({2, 1}));
  CHECK(size(to_ring_spec(r)) == 864);
  CHECK(to_string(to_partition_ring({{5, 1}})) == "GF(5)");
  auto s = to_partition_ring({{2, 4}, {2, 1}, {3, 3}});
  CHECK(s.assignment.at(2) == Partition({4, 1}));
  CHECK(s.assignment.at(3) == Partition({3}));
  CHECK(render_symbolic(Partition({3, 2})) == "GF(p^3)xGF(p^2)");
  CHECK(to_string(to_ring_spec(PR(2, {30, 7}))) == "GF(2^30)xGF(2^7)");
  CHECK_THROWS_AS(to_partition_ring({}), DomainError);
  CHECK(as_partition_ring(parse_ring("GF(4)xGF(8)xGF(3)")) ==
        std::optional<PartitionRing>(to_partition_ring({{2, 3}, {2, 2}, {3, 1}})));
  CHECK_FALSE(as_partition_ring(parse_ring("GF(4)xD(2)")));
}

TEST_CASE("field product dominance examples") {
  auto v = field_product_dominates(PR(2, {3, 2}), PR(2, {5}));
  CHECK(v.relation == Relation::NotDominates);
  CHECK(describe(v) == "NO (prime 2 exponent 5 has no divisor in {3,2})");
  auto w = field_product_dominates(PR(2, {5}), PR(2, {3, 2}));
  CHECK(w.relation == Relation::NotDominates);
  CHECK(describe(w) == "NO (prime 2 exponent 3 has no divisor in {5})");

  auto a = field_product_dominates(PR(2, {3, 1, 1}), PR(2, {4, 1}));
  auto b = field_product_dominates(PR(2, {4, 1}), PR(2, {3, 1, 1}));
  CHECK(a.relation == Relation::Dominates);
  CHECK(b.relation == Relation::Dominates);
  CHECK_FALSE(check_certificate(a));
  CHECK_FALSE(check_certificate(b));

  auto self = field_product_dominates(PR(3, {2, 1}), PR(3, {2, 1}));
  CHECK(self.relation == Relation::Dominates);
  CHECK_FALSE(check_certificate(self));

  // different primes never help
  CHECK(field_product_dominates(PR(3, {1}), PR(2, {1})).relation == Relation::NotDominates);
}

TEST_CASE("bridge") {
  CHECK(partition_dominance_bridge(PR(2, {1, 1}), PR(2, {2})));
  CHECK_FALSE(partition_dominance_bridge(PR(2, {3, 2}), PR(2, {5})));
  CHECK(partition_dominance_bridge(to_partition_ring({{2, 2}, {2, 2}, {2, 1}, {3, 2}, {3, 1}}),
                                   to_partition_ring({{2, 4}, {2, 1}, {3, 3}})));
  CHECK_THROWS_AS(partition_dominance_bridge(PR(2, {2}), PR(3, {2})), DomainError);
  CHECK_THROWS_AS(partition_dominance_bridge(PR(2, {2}), PR(2, {3})), DomainError);
}

TEST_CASE("bridge agrees with the field-product criterion, sizes up to 2^12") {
  for (unsigned a = 0; a <= 12; ++a) {
    for (unsigned b = 0; b <= 7; ++b) {
      if (a + b == 0) continue;
      std::uint64_t sz = (std::uint64_t{1} << a);
      for (unsigned i = 0; i < b; ++i) sz *= 3;
      if (sz > 4096) continue;
      auto all = assignments(a, b);
      for (const auto& s : all) {
        for (const auto& r : all) {
          auto v = field_product_dominates(s, r);
          REQUIRE(v.relation != Relation::Unknown);
          CHECK((v.relation == Relation::Dominates) == partition_dominance_bridge(s, r));
        }
      }
    }
  }
}

TEST_CASE("field product dominance is a quasi-order at one prime") {
  for (unsigned k = 1; k <= 10; ++k) {
    auto parts = enumerate_partitions(k);
    std::vector<PartitionRing> rings;
    for (const auto& a : parts) rings.push_back(PartitionRing{{{2, a}}});
    const std::size_t n = rings.size();
    std::vector<char> dom(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        dom[i * n + j] = field_product_dominates(rings[i], rings[j]).relation == Relation::Dominates;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(dom[i * n + i]);
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < n && dom[i * n + j]; ++l) {
          if (dom[j * n + l] && !dom[i * n + l]) FAIL("not transitive at k=" << k);
        }
      }
    }
  }
}

TEST_CASE("certificates for field products re-verify") {
  for (unsigned k = 1; k <= 6; ++k) {
    for (const auto& a : enumerate_partitions(k)) {
      for (const auto& b : enumerate_partitions(k)) {
        auto v = field_product_dominates(PartitionRing{{{2, a}}}, PartitionRing{{{2, b}}});
        auto bad = check_certificate(v);
        CHECK_MESSAGE(!bad, bad.value_or(""));
      }
    }
  }
}

TEST_CASE("Z(n) dominance") {
  auto v = zmod_dominates(12, 4);
  CHECK(v.relation == Relation::Dominates);
  CHECK_FALSE(check_certificate(v));
  auto w = zmod_dominates(4, 8);
  CHECK(w.relation == Relation::NotDominates);
  CHECK_FALSE(check_certificate(w));
  CHECK(zmod_dominates(9, 3).relation == Relation::Dominates);
  CHECK(zmod_dominates(3, 9).relation == Relation::NotDominates);
  for (std::uint64_t n = 2; n <= 40; ++n) {
    for (std::uint64_t m = 2; m <= 40; ++m) {
      auto x = zmod_dominates(n, m);
      CHECK((x.relation == Relation::Dominates) == (n % m == 0));
      CHECK_FALSE(check_certificate(x));
      // the catalog engine agrees
      auto y = catalog_dominates(RingSpec::integers_mod(n), RingSpec::integers_mod(m));
      CHECK(y.relation == x.relation);
    }
  }
}

TEST_CASE("catalog engine: rings of size p^2") {
  for (const char* p : {"2", "3"}) {
    std::string P(p);
    std::string zp2 = "Z(" + std::to_string(std::stoi(P) * std::stoi(P)) + ")";
    std::string dp = "D(" + P + ")";
    std::string ff = "GF(" + P + ")xGF(" + P + ")";
    std::string big = "GF(" + P + "^2)";
    CHECK(rel(zp2.c_str(), dp.c_str()) == Relation::Dominates);
    CHECK(rel(dp.c_str(), zp2.c_str()) == Relation::NotDominates);
    CHECK(rel(dp.c_str(), ff.c_str()) == Relation::Dominates);
    CHECK(rel(ff.c_str(), dp.c_str()) == Relation::Dominates);
    CHECK(rel(ff.c_str(), big.c_str()) == Relation::Dominates);
    CHECK(rel(big.c_str(), ff.c_str()) == Relation::NotDominates);
    CHECK(rel(dp.c_str(), big.c_str()) == Relation::Dominates);
    CHECK(rel(big.c_str(), dp.c_str()) == Relation::NotDominates);
    CHECK(rel(zp2.c_str(), big.c_str()) == Relation::Dominates);
    CHECK(rel(big.c_str(), zp2.c_str()) == Relation::NotDominates);
  }
  CHECK(rel("GF(4)xGF(2)", "GF(4)") == Relation::Dominates);
  auto v = catalog_dominates(parse_ring("GF(4)xGF(2)"), parse_ring("GF(4)"));
  REQUIRE(v.certificate.size() == 1);
  CHECK(v.certificate[0].size() == 1);
  CHECK(v.certificate[0][0].kind == HomKind::Projection);
}

TEST_CASE("catalog engine: unknown only where the rules run out") {
  auto v = catalog_dominates(parse_ring("GF(8)xZ(9)"), parse_ring("GF(4)xGF(2)xZ(9)"));
  CHECK(v.relation == Relation::Unknown);
  CHECK(v.obligation.find("GF(2^3)xZ(9)") != std::string::npos);
  // a failing atom elsewhere settles the pair
  auto w = catalog_dominates(parse_ring("GF(8)xZ(9)"), parse_ring("GF(4)xZ(27)"));
  CHECK(w.relation == Relation::NotDominates);
  CHECK_FALSE(check_certificate(w));
  // field products against Z(p^e) are refused by the characteristic
  auto x = catalog_dominates(parse_ring("GF(2)xGF(2)"), parse_ring("Z(4)"));
  CHECK(x.relation == Relation::NotDominates);
  CHECK(x.violation->criterion == Criterion::Characteristic);
}

TEST_CASE("catalog engine agrees with the field-product criterion on exact rings") {
  auto corpus = testing::ring_corpus(64);
  for (const auto& s : corpus) {
    for (const auto& r : corpus) {
      if (size(s) != size(r)) continue;
      auto v = catalog_dominates(s, r);
      auto bad = check_certificate(v);
      CHECK_MESSAGE(!bad, to_string(s) << " vs " << to_string(r) << ": " << bad.value_or(""));
      auto fs = as_partition_ring(s);
      auto fr = as_partition_ring(r);
      if (fs && fr) {
        CHECK(v.relation == field_product_dominates(*fs, *fr).relation);
      }
    }
  }
}

TEST_CASE("maximal rings") {
  CHECK(is_maximal_ring(parse_ring("GF(8)xGF(4)")));
  CHECK(is_maximal_ring(parse_ring("GF(32)")));
  CHECK_FALSE(is_maximal_ring(parse_ring("D(2)")));
  CHECK_FALSE(is_maximal_ring(parse_ring("GF(4)xGF(2)")));
  CHECK_FALSE(is_maximal_ring(parse_ring("Z(6)")));
  CHECK(is_maximal_ring(parse_ring("GF(2)xGF(3)")));

  auto m32 = maximal_rings({{2, 5}});
  REQUIRE(m32.size() == 2);
  CHECK(to_string(m32[0]) == "GF(2^5)");
  CHECK(to_string(m32[1]) == "GF(2^3)xGF(2^2)");
  CHECK(maximal_rings({{7, 6}}).size() == 1);
  CHECK(maximal_rings({{2, 7}, {3, 5}, {5, 2}}).size() == 6);
  CHECK_THROWS_AS(maximal_rings({{2, 41}}), LimitError);
  CHECK_THROWS_AS(maximal_rings({{2, 3}, {2, 4}}), DomainError);

  for (unsigned a = 1; a <= 30; ++a) {
    bool unique = a == 1 || a == 2 || a == 3 || a == 4 || a == 6;
    CHECK((maximal_rings({{2, a}}).size() == 1) == unique);
  }
}

TEST_CASE("maximal rings are pairwise incomparable") {
  for (unsigned a = 1; a <= 30; a += 1) {
    auto list = maximal_rings({{3, a}});
    for (const auto& r : list) CHECK(is_maximal_ring(to_ring_spec(r)));
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = 0; j < list.size(); ++j) {
        if (i == j) continue;
        CHECK(field_product_dominates(list[i], list[j]).relation == Relation::NotDominates);
      }
    }
  }
  auto mixed = maximal_rings({{2, 11}, {3, 7}});
  for (std::size_t i = 0; i < mixed.size(); ++i) {
    for (std::size_t j = 0; j < mixed.size(); ++j) {
      if (i != j) CHECK(field_product_dominates(mixed[i], mixed[j]).relation == Relation::NotDominates);
    }
  }
}

TEST_CASE("field refuges") {
  CHECK(to_string(smallest_field_refuge(parse_ring("Z(12)"), 2)) == "GF(2)");
  CHECK(to_string(smallest_field_refuge(parse_ring("GF(4)xGF(3)"), 2)) == "GF(2^2)");
  CHECK(to_string(smallest_field_refuge(parse_ring("Z(30)"), 5)) == "GF(5)");
  CHECK_THROWS_AS(smallest_field_refuge(parse_ring("Z(12)"), 5), DomainError);
  for (const auto& r : testing::ring_corpus(128)) {
    for (const auto& [p, e] : factorize(size(r))) {
      auto f = smallest_field_refuge(r, p);
      auto v = catalog_dominates(r, f);
      CHECK(v.relation == Relation::Dominates);
      CHECK_FALSE(check_certificate(v));
    }
  }
}

TEST_CASE("square-free fields") {
  auto six = square_free_fields(6);
  REQUIRE(six.size() == 2);
  CHECK(to_string(six[0]) == "GF(2)");
  CHECK(to_string(six[1]) == "GF(3)");
  CHECK(square_free_fields(30).size() == 3);
  CHECK(to_string(square_free_fields(7)[0]) == "GF(7)");
  CHECK_THROWS_AS(square_free_fields(12), DomainError);
}

TEST_CASE("every small ring is dominated by a maximal ring of its size") {
  for (const auto& r : testing::ring_corpus(128)) {
    auto p = maximal_dominator(r);
    auto spec = to_ring_spec(p);
    CHECK(size(spec) == size(r));
    CHECK(is_maximal_ring(spec));
    auto v = catalog_dominates(r, spec);
    CHECK_MESSAGE(v.relation == Relation::Dominates, to_string(r));
    CHECK_FALSE(check_certificate(v));
  }
}

TEST_CASE("checker rejects forged certificates") {
  auto v = catalog_dominates(parse_ring("GF(4)xGF(2)"), parse_ring("GF(4)"));
  auto forged = v;
  forged.certificate[0][0].index = 1;
  CHECK(check_certificate(forged));
  auto wrong_end = catalog_dominates(parse_ring("GF(2)xGF(2)"), parse_ring("GF(4)"));
  wrong_end.rhs = parse_ring("GF(8)");
  CHECK(check_certificate(wrong_end));
  auto no = field_product_dominates(PR(2, {3, 2}), PR(2, {5}));
  no.violation->candidates = {3};
  CHECK(check_certificate(no));
  auto flipped = field_product_dominates(PR(2, {1, 1}), PR(2, {2}));
  flipped.relation = Relation::NotDominates;
  flipped.violation = Violation{Criterion::FieldProduct, 2, 2, {1, 1}, 0, 0};
  CHECK(check_certificate(flipped));
}
