#include <doctest.h>

#include "tdlc/index_lemmas.hpp"

using namespace tdlc;
using namespace tdlc::finite;

TEST_CASE("normalized core in S3") {
  auto g = Group::symmetric3();
  const auto& subs = g.subgroups();
  const Elements a3 = subs[4], t = subs[1];
  REQUIRE(a3.count() == 3);
  CHECK(normalized_core(g, t, a3) == g.unit());
  CHECK(normalized_core(g, a3, g.all()) == a3);
  CHECK(normalized_core(g, t, g.unit()) == t);
}

TEST_CASE("index identities hold exhaustively on the catalog groups") {
  for (const auto& g : {Group::symmetric3(), Group::dihedral(4), Group::quaternion(), Group::cyclic(12),
                        Group::alternating4()}) {
    auto r = check_index_identities(g);
    INFO(g.order());
    CHECK(r.ok());
    for (const char* name : {"index-tower", "product-index", "meet-index", "join-index", "preimage-index",
                             "image-index", "image-monotone", "snake", "normalized-core"})
      CHECK(r.checked[name] > 0);
  }
}

TEST_CASE("snake in S3 with A = A3 and B' of order 2") {
  auto g = Group::symmetric3();
  const auto& subs = g.subgroups();
  Elements ba = g.product_set(subs[1], subs[4]);
  CHECK(ba == g.all());
  CHECK(g.all().count() / subs[1].count() == (subs[4].count() / (subs[4] & subs[1]).count()) * 1);
}
