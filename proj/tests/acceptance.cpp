#include <cstdio>
#include <iostream>
#include <string>

#include "ncalg/verify.hpp"

// acceptance [id...]: one PASS/FAIL line per criterion
int main(int argc, char** argv) {
    std::vector<int> only;
    try {
        for (int i = 1; i < argc; ++i) only.push_back(std::stoi(argv[i]));
    } catch (const std::exception&) {
        std::cerr << "usage: acceptance [criterion ids]\n";
        return 2;
    }
    bool ok = true;
    for (const auto& r : ncalg::run_acceptance(only)) {
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.2fs", r.seconds);
        std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.title << " (" << secs << ")";
        if (!r.detail.empty()) std::cout << " " << r.detail;
        std::cout << "\n";
        ok = ok && r.passed;
    }
    return ok ? 0 : 1;
}
