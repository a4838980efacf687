// A short tour: build the pinched-curve catalog over F_3, label each curve,
// and print its Picard data.

#include <iostream>

#include "pincurve/pincurve.hpp"

using namespace pincurve;

int main() {
    FiniteField f3(3);
    TailSemigroup nat;
    TailSemigroup z3(3, {0});

    std::cout << "-- the nodal curve: two rational points of P^1 glued --\n";
    auto node = catalog_p1prime(f3, nat, nat);
    std::cout << "Ztilde = " << node.ztilde.describe()
              << ", seminormal: " << (is_seminormal(node) ? "yes" : "no") << "\n";
    std::cout << "label under Gm: " << *classify(node, GroupDescriptor::gm()) << "\n";
    auto rep = units_pic_sequence(node);
    std::cout << "Pic = " << rep.pic.to_string()
              << " (torsion checked against the gluing oracle: "
              << pic_torsion_oracle(node).to_string() << ")\n\n";

    std::cout << "-- a monomial cusp: A^1 with semigroup {0} u {r>=3} --\n";
    auto cusp = catalog_a1mc(f3, z3);
    auto chart = chart_ring(cusp);
    std::cout << "conductor: " << up::to_string(f3, conductor(*chart), "t") << "\n";
    std::cout << "label under Gm: " << *classify(cusp, GroupDescriptor::gm()) << "\n\n";

    std::cout << "-- the conic pinched at its degree-2 point --\n";
    auto conic = catalog_conic_descent(f3, nat, true);
    auto label = *classify(conic, GroupDescriptor::norm_torus(3));
    CurveCaseRecord rec{label, GroupDescriptor::norm_torus(3), 3, conic, std::nullopt,
                        nullptr};
    std::cout << "label: " << label << ", Pic^G = " << equivariant_pic(rec).to_string()
              << "\n\n";

    std::cout << "-- Russell form y^4 = x + a x^2 + b^2 x^4 over F_2(a,b) --\n";
    RussellBase kab(FiniteField(2), {"a", "b"});
    auto form = make_form(kab, 2, 2,
                          {kab.var(0), kab.zero(), kab.mul(kab.var(1), kab.var(1))});
    auto split = splitting_extension(kab, form);
    std::cout << "splitting field degree " << split.degree << ", generators:";
    for (auto& g : split.generators) std::cout << " " << g.rendered;
    std::cout << "\n";
    return 0;
}
