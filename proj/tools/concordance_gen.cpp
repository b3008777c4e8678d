// Writes the concordance document; fails if the check registry and the
// concordance table disagree.

#include "triality/concordance.hpp"

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: " << argv[0] << " OUTPUT.md\n";
        return 2;
    }
    const auto diff = triality::concordance_diff();
    if (!diff.empty()) {
        for (const auto& n : diff.missing_entry) std::cerr << "check without concordance entry: " << n << "\n";
        for (const auto& n : diff.orphan_entry) std::cerr << "concordance entry without check: " << n << "\n";
        return 1;
    }
    std::ofstream out(argv[1], std::ios::binary);
    out << triality::emit_concordance();
    if (!out) {
        std::cerr << "cannot write " << argv[1] << "\n";
        return 1;
    }
    return 0;
}
