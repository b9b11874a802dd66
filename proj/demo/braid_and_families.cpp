// Walks through the main objects once: the trefoil's Lorenz braid, the
// smallest instance of each family with its certificate, and its mirror.

#include <iostream>

#include "lorenz/lorenz.hpp"

int main() {
  using namespace lorenz;

  const PeriodicWord trefoil("LRRLR");
  const LorenzBraid b = lorenz_braid(trefoil);
  std::cout << "braid of " << trefoil << ": perm " << format_permutation(b.perm()) << ", "
            << crossing_count(b) << " crossings, genus " << positive_braid_genus(b)
            << ", braid index " << braid_index(trefoil) << "\n";
  std::cout << "  artin word: " << format_artin_word(emit_braid_word(b)) << "\n\n";

  for (const FamilyTraits& t : kFamilies) {
    int n = 2;
    while (!family_parameter_violation(t.id, 1, n).empty()) ++n;
    const FamilyInstance inst = family_instance(t.id, 1, n);
    const Certificate cert = verify_instance(inst);
    const FamilyInstance m = mirror(inst);
    std::cout << "family " << t.id << " (k=1, n=" << n << "): (" << inst.pair.x() << ", "
              << inst.pair.y() << ") * " << inst.s << "\n"
              << "  T(" << cert.p << "," << cert.q << ") " << to_string(cert.kind)
              << (cert.issued() ? ", certificate issued" : ", certificate REFUSED") << "\n"
              << "  mirror: (" << m.pair.x() << ", " << m.pair.y() << ") * " << m.s << "\n";
  }
  return 0;
}
