// Compare the driver with the branch oracle on random products.

#include <aproot/aproot.hpp>

#include <iostream>

using namespace aproot;

int main(int argc, char** argv) {
    const std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 1;
    const int count = argc > 2 ? std::stoi(argv[2]) : 20;
    std::mt19937_64 rng(seed);
    PrimeField k{101};
    int agree = 0;
    for (int i = 0; i < count; ++i) {
        auto prod = testkit::random_squarefree_product<Fp>(k, rng);
        auto rep = testkit::balanced_oracle(prod);
        auto f = prod.polynomial();
        const bool accepted = pseudo_irreducible(f).accepted;
        agree += accepted == rep.balanced;
        std::cout << (accepted ? "balanced  " : "unbalanced") << "  branches " << rep.branches << "  deg "
                  << f.degree() << "\n";
        for (const auto& b : prod.specs) std::cout << "    " << testkit::to_string(b) << "\n";
    }
    std::cout << agree << "/" << count << " agree with the oracle\n";
    return agree == count ? 0 : 1;
}
