// Walks through the two order-64 counterexamples and the G(m,n) family.
#include <iostream>

#include "involex/involex.hpp"

int main() {
  using namespace involex;

  const char* presentations[] = {
      "<a,b | a^16, b^4, [b,a]=a^4>",
      "<a,b | a^16, b^4, [b,a]=a^-2>",
  };
  for (const char* text : presentations) {
    const ConcreteGroup G = concretize(parse_presentation(text));
    const StarReport r = satisfies_star(G);
    std::cout << text << ": order " << G.order() << ", " << (r.satisfies ? "satisfies" : "fails") << " after "
              << r.extensions_tried << " extensions\n";
  }

  for (auto [m, n] : {std::pair{16, 4}, {16, 8}, {32, 8}}) {
    const FamilyObstruction ob = analyze_family(m, n);
    std::cout << "G(" << m << "," << n << "): obstruction " << (ob.obstruction_applies ? "applies" : "absent");
    if (ob.direct_satisfies) std::cout << ", direct check " << (*ob.direct_satisfies ? "satisfies" : "fails");
    std::cout << "\n";
  }
}
