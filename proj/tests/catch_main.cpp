#define CATCH_CONFIG_RUNNER
#include <catch2/catch.hpp>

#include "support/random_gen.hpp"

// Seed for the randomized property suites; override with --seed.
std::uint64_t mori_test::global_seed = mori_test::kDefaultSeed;

int main(int argc, char* argv[]) {
    Catch::Session session;
    using namespace Catch::clara;
    auto cli = session.cli() |
               Opt(mori_test::global_seed, "seed")["--seed"](
                   "seed for the randomized property suites");
    session.cli(cli);
    int rc = session.applyCommandLine(argc, argv);
    if (rc != 0)
        return rc;
    return session.run();
}
