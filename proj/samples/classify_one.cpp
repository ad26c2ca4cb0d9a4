// Classify one generalized pineapple and print each mate with its spectral check.
#include <cstdlib>
#include <iostream>

#include "cospec/classifier.hpp"

int main(int argc, char** argv) {
    using namespace cospec;
    PineappleParams params{8, 3, 4};
    if (argc == 4) params = {std::atoll(argv[1]), std::atoll(argv[2]), std::atoll(argv[3])};
    params.validate();

    std::cout << "char poly: " << pineapple_poly(params).to_string() << "\n";
    auto c = enumerate_mates(params);
    std::cout << (c.das() ? "DAS" : "not DAS") << "\n";
    for (const auto& m : c.mates) std::cout << "  " << to_string(m.spec) << (m.verified ? "  (verified)" : "") << "\n";
}
