// Prints the neighborhood of 1/2 in F(B(2m),m) for a large order, walking
// outwards with the closed-form successor/predecessor queries.

#include <cstdlib>
#include <iostream>

#include <farey/farey.hpp>

int main(int argc, char** argv) {
    const farey::Order m(argc > 1 ? std::atoll(argv[1]) : 1'000'000);
    farey::Fraction left = farey::Fraction::half();
    farey::Fraction right = farey::Fraction::half();
    for (int step = 0; step < 5; ++step) {
        left = farey::fbm_pred(left, m).neighbor;
        right = farey::fbm_succ(right, m).neighbor;
    }
    std::cout << "m = " << m.value() << ":";
    farey::Fraction f = left;
    for (int step = 0; step <= 10; ++step) {
        std::cout << (step ? " < " : " ") << f;
        if (f != right) f = farey::fbm_succ(f, m).neighbor;
    }
    std::cout << '\n';
}
