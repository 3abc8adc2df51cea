// One line per acceptance criterion; exit status is nonzero if any fails.
#include "eqcfk/verify.hpp"

#include <iostream>

int main()
{
    using namespace eqcfk;
    VerifyReport r = run_verify(KnotLibrary::builtin());
    for (const auto& c : r.checks)
        if (!c.pass) std::cout << "  failed check [" << c.group << "] " << c.name << ": " << c.detail << "\n";
    auto per = r.per_criterion();
    for (const auto& c : criteria()) {
        bool pass = per.count(c.number) && per.at(c.number);
        std::cout << "criterion " << c.number << " (" << c.group << ", " << c.title << "): " << (pass ? "PASS" : "FAIL")
                  << "\n";
    }
    std::cout << r.checks.size() << " checks\n";
    return r.ok() ? 0 : 1;
}
