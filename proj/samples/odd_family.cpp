// Walk the infinite non-DAS family indexed by odd a and check each member by brute force.
#include <iostream>

#include "cospec/classifier.hpp"
#include "cospec/verify.hpp"

int main() {
    using namespace cospec;
    for (Int a = 3; a <= 11; a += 2) {
        auto [params, mate] = corollary_family(a);
        std::cout << "a=" << a << "  K_{" << params.p << "," << params.k << "}^{" << params.q << "}  ~  "
                  << to_string(mate.spec) << "  " << (verify_mate(params, mate.spec) ? "ok" : "MISMATCH") << "\n";
    }
}
