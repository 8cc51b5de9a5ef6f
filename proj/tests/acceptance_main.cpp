// One line per acceptance criterion; exit status 0 iff all pass.

#include <iostream>

#include "gbt/acceptance.hpp"

int main() {
    int failed = 0, id = 0;
    for (const auto& c : gbt::acceptance::all()) {
        gbt::acceptance::Result r;
        ++id;
        try {
            r = c();
        } catch (const std::exception& e) {
            r.id = id;
            r.title = std::string("exception: ") + e.what();
        }
        std::cout << r.line() << "\n";
        for (std::size_t i = 1; i < r.details.size(); ++i) std::cout << "      " << r.details[i] << "\n";
        for (const auto& n : r.notes) std::cout << "      note: " << n << "\n";
        failed += !r.pass;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria pass")) << "\n";
    return failed ? 1 : 0;
}
