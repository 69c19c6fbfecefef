#include <catch2/catch_amalgamated.hpp>

#include "psik/catalog.hpp"
#include "psik/psi.hpp"
#include "psik/structure.hpp"

using namespace psik;

TEST_CASE("catalog basics", "[catalog]") {
  const FiniteGroup a5 = catalog("A5");
  CHECK(a5.order() == 60);
  CHECK(a5.name() == "A5");
  CHECK(order_spectrum(a5).counts ==
        std::map<long long, long long>{{1, 1}, {2, 15}, {3, 20}, {5, 24}});

  CHECK(catalog("S3").order() == 6);
  CHECK(catalog("S4").order() == 24);
  CHECK(catalog("S5").order() == 120);
  CHECK(catalog("V4").order() == 4);
  CHECK(catalog("Z2xZ2").order() == 4);
  CHECK(catalog("Z13:Z6").order() == 78);

  CHECK(psi_k(catalog("Z60"), 1) == 1617);
  CHECK(catalog("Z1").order() == 1);

  CHECK_THROWS_AS(catalog("Zx"), Error);
  CHECK_THROWS_AS(catalog("nope"), Error);
}

TEST_CASE("Z60 in product form has the cyclic spectrum", "[catalog]") {
  const FiniteGroup product = catalog("Z4xZ3xZ5");
  CHECK(product.order() == 60);
  CHECK(is_cyclic(product));
  CHECK(order_spectrum(product).counts == order_spectrum(catalog("Z60")).counts);
}

TEST_CASE("H1 structure", "[catalog]") {
  const FiniteGroup h1 = catalog("H1");
  CHECK(h1.order() == 156);
  CHECK(psi_k(h1, 1) == 1069);
  CHECK(order_spectrum(h1).counts ==
        std::map<long long, long long>{{1, 1}, {2, 27}, {3, 26}, {6, 78}, {13, 12}, {26, 12}});
  CHECK(is_solvable(h1));
}

TEST_CASE("H2 structure", "[catalog]") {
  const FiniteGroup h2 = catalog("H2");
  CHECK(h2.order() == 156);
  CHECK(psi_k(h2, 1) == 1411);
  CHECK(order_spectrum(h2).counts ==
        std::map<long long, long long>{{1, 1}, {2, 3}, {3, 104}, {13, 12}, {26, 36}});
  CHECK(is_solvable(h2));
}
