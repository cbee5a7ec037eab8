// Multiply two partitions of degree 6 and show the floating components.
#include <iostream>

#include <pmon/partition.hpp>

using namespace pmon;

int main() {
  auto a = Partition::parse("1 4; 2 3 4' 5'; 5 6; 1' 2' 6'; 3'");
  auto b = Partition::parse("1 2; 3 4 1'; 5 5' 6'; 6; 2' 3'; 4'");
  auto p = multiply_with_floats(a, b);
  std::cout << "a     = " << a.to_string() << "\n"
            << "b     = " << b.to_string() << "\n"
            << "ab    = " << p.part.to_string() << "\n"
            << "Phi   = " << p.floats << "\n"
            << "a*    = " << involution(a).to_string() << "\n"
            << "rank  = " << rank(a) << ", " << rank(b) << ", " << rank(p.part) << "\n";
  auto t = twisted_multiply({0, a}, {0, b});
  std::cout << "twisted: t^" << t.shift << " " << t.part.to_string() << "\n";
}
