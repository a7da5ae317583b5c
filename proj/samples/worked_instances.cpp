// Walks through a handful of small instances with the library API.

#include <iostream>

#include "normlen/normlen.hpp"

using namespace normlen;

int main() {
    const AmbientRing amb(2, 2);
    auto mod = [&](const char* text) { return parse_module(text, amb); };

    for (const char* text : {"R/<p, x2>", "R/<p^(1/2), x2>", "<p, x2>/<p^2, x2^2>", "R/<p, x2^2> (+) R/<p^2>"}) {
        const auto M = mod(text);
        std::cout << text << "  lambda = " << normalized_length(M).str() << "\n";
    }

    const auto M = mod("R/<p, x2>");
    const auto pb = check_pullback(M);
    std::cout << "twist of R/<p, x2>: " << render_module(twist(M)) << ", lambda " << pb.lambda_twist.str() << "\n";

    const auto I = parse_ideal("<p^2, x2^2>", amb);
    const auto J = parse_ideal("<p, x2>", amb);
    const auto bound = check_product_bound(I, J, parse_monomial("p", amb), parse_monomial("x2^(1/2)", amb));
    std::cout << "lambda(abN) = " << bound.ab_n.str() << " <= " << bound.a_sub.str() << " + " << bound.b_quotient.str()
              << "\n";

    const auto ann = check_annihilator_bound(mod("R/<p^(1/2), p^(1/4)*x2^(1/4), x2^(1/2)>"));
    std::cout << "lambda " << ann.lambda.str() << ", t " << ann.t.str() << ", t^d/d! " << ann.simplex_bound.str()
              << ", p^{-dk} " << ann.box_bound->str() << "\n";

    const auto spl = splinter::verify_non_splinter({3, 3, 3});
    std::cout << "splinter (3,3,3): " << (spl.pass() ? "witness verified" : "witness FAILED") << "\n";
}
