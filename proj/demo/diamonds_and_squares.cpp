// Singular squares and linked diamonds of the rank-1 class of P_3.
#include <algorithm>
#include <iostream>

#include <pmon/biorder.hpp>

using namespace pmon;

int main() {
  PartitionMonoid s(3);
  auto            d  = dclass_data(s, 1);
  auto            ss = enumerate_singular_squares(d);
  std::cout << d.elements.size() << " elements, " << d.idempotents.size() << " idempotents, "
            << d.projections.size() << " projections\n";
  std::cout << ss.squares.size() << " non-degenerate singular squares\n";
  for (size_t k = 0; k < std::min<size_t>(ss.squares.size(), 5); ++k) {
    auto const& q = ss.squares[k];
    std::cout << "  [" << s.format(d.idempotents[q.e]) << " | " << s.format(d.idempotents[q.f]) << " ; "
              << s.format(d.idempotents[q.g]) << " | " << s.format(d.idempotents[q.h]) << "] "
              << orientation_name(q.orientation) << "\n";
  }
  auto ds    = enumerate_linked_diamonds(d);
  auto proper = std::count_if(ds.begin(), ds.end(), [](auto const& x) { return !x.degenerate(); });
  std::cout << ds.size() << " linked diamonds, " << proper << " non-degenerate\n";
  std::cout << linked_triangles(ds).size() << " linked triangles\n";
}
