#include <parvb/verify.hpp>

#include <cstdio>

int main() {
    auto results = parvb::run_acceptance({});
    bool all = true;
    for (const auto& r : results) {
        std::printf("[%s] %2d %-50s %6ld ms  %s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.ms, r.detail.c_str());
        if (!r.pass) all = false;
    }
    return all ? 0 : 1;
}
