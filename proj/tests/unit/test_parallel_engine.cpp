#include "aesbench/parallel_engine.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <mutex>
#include <vector>

using namespace aesbench;
using namespace aesbench::testing;

TEST_CASE("plan sizing")
{
    const WorkPlan p = plan(1600, 4, 1, Mode::ecb, Direction::encrypt);
    CHECK(p.total_states == 100);
    CHECK(p.task_count() == 100);

    CHECK(plan(16, 8, 1, Mode::ctr, Direction::decrypt).task_count() == 1);
    CHECK(plan(16, 1, 16, Mode::ecb, Direction::encrypt).task_count() == 1);

    const WorkPlan q = plan(1616, 2, 4, Mode::ecb, Direction::encrypt);
    CHECK(q.total_states == 101);
    CHECK(q.task_count() == 26);

    // Enumerate rather than trust the ceiling formula.
    for (std::size_t states = 1; states <= 64; ++states) {
        for (std::size_t g = 1; g <= 17; ++g) {
            std::size_t tasks = 0;
            for (std::size_t covered = 0; covered < states; covered += g)
                ++tasks;
            REQUIRE(plan(16 * states, 3, g, Mode::ecb, Direction::encrypt).task_count() == tasks);
        }
    }
}

TEST_CASE("plan rejects bad input")
{
    CHECK_THROWS_AS(plan(0, 1, 1, Mode::ecb, Direction::encrypt), std::invalid_argument);
    CHECK_THROWS_AS(plan(1202, 1, 1, Mode::ecb, Direction::encrypt), std::invalid_argument);
    CHECK_THROWS_AS(plan(32, 0, 1, Mode::ecb, Direction::encrypt), std::invalid_argument);
    CHECK_THROWS_AS(plan(32, 1, 0, Mode::ecb, Direction::encrypt), std::invalid_argument);
    for (Mode m : {Mode::cbc, Mode::cfb, Mode::ofb})
        CHECK_THROWS_AS(plan(32, 1, 1, m, Direction::encrypt), ClassificationError);
}

TEST_CASE("parallel_apply matches sequential_apply")
{
    Rng rng(1);
    const CipherContext ctx(CipherKey{rng.block()});
    const IV iv{rng.block()};
    const Bytes msg = pad(rng.bytes(1202));

    for (Mode mode : {Mode::ecb, Mode::ctr}) {
        const std::optional<IV> mode_iv = mode == Mode::ctr ? std::optional<IV>(iv) : std::nullopt;
        for (Direction dir : {Direction::encrypt, Direction::decrypt}) {
            const Bytes expected = sequential_apply(msg, ctx, mode, dir, mode_iv);
            for (std::size_t workers : {1, 2, 4, 8}) {
                for (std::size_t g : {1, 2, 4, 16}) {
                    const WorkPlan p = plan(msg.size(), workers, g, mode, dir);
                    REQUIRE(parallel_apply(msg, ctx, p, mode_iv) == expected);
                }
            }
        }
    }
}

TEST_CASE("sequential_apply")
{
    const CipherContext ctx(CipherKey{hex_block("000102030405060708090a0b0c0d0e0f")});
    const Bytes pt = hex_bytes("00112233445566778899aabbccddeeff");
    CHECK(sequential_apply(pt, ctx, Mode::ecb, Direction::encrypt) == hex_bytes("69c4e0d86a7b0430d8cdb78070b4c55a"));

    Rng rng(2);
    const IV iv{rng.block()};
    const Bytes msg = rng.bytes(320);
    for (Mode mode : kAllModes) {
        const std::optional<IV> mode_iv = mode == Mode::ecb ? std::nullopt : std::optional<IV>(iv);
        const Bytes enc = sequential_apply(msg, ctx, mode, Direction::encrypt, mode_iv);
        CHECK(sequential_apply(enc, ctx, mode, Direction::decrypt, mode_iv) == msg);
    }
    CHECK_THROWS_AS(sequential_apply(msg, ctx, Mode::cbc, Direction::encrypt), std::invalid_argument);
    CHECK_THROWS_AS(sequential_apply(msg, ctx, Mode::ecb, Direction::encrypt, iv), std::invalid_argument);
}

TEST_CASE("identical ECB states stay identical under any schedule")
{
    Rng rng(3);
    const CipherContext ctx(CipherKey{rng.block()});
    const Block b = rng.block();
    Bytes msg;
    for (int i = 0; i < 100; ++i)
        msg.insert(msg.end(), b.begin(), b.end());
    const Bytes out = parallel_apply(msg, ctx, plan(msg.size(), 8, 1, Mode::ecb, Direction::encrypt));
    const Block c = ctx.encrypt(b);
    for (std::size_t i = 0; i < 100; ++i)
        REQUIRE(std::equal(c.begin(), c.end(), out.begin() + static_cast<std::ptrdiff_t>(16 * i)));
}

TEST_CASE("each task touches only its own states")
{
    Rng rng(4);
    const CipherContext ctx(CipherKey{rng.block()});
    const Bytes msg = pad(rng.bytes(1202)); // 76 states

    for (std::size_t g : {1, 4, 16}) {
        std::mutex m;
        std::vector<TaskView> log;
        const WorkPlan p = plan(msg.size(), 4, g, Mode::ctr, Direction::encrypt);
        const Bytes out = parallel_apply(msg, ctx, p, IV{rng.block()}, [&](const TaskView& v) {
            std::lock_guard lock(m);
            log.push_back(v);
        });

        REQUIRE(log.size() == p.task_count());
        std::sort(log.begin(), log.end(), [](const TaskView& a, const TaskView& b) { return a.first_state < b.first_state; });
        std::size_t next_state = 0;
        for (std::size_t i = 0; i < log.size(); ++i) {
            const TaskView& v = log[i];
            CHECK(v.task_index == i);
            CHECK(v.first_state == next_state);
            CHECK(v.state_count == std::min(g, p.total_states - v.first_state));
            CHECK(v.input.data() == msg.data() + 16 * v.first_state);
            CHECK(v.input.size() == 16 * v.state_count);
            CHECK(v.output.data() == out.data() + 16 * v.first_state);
            CHECK(v.output.size() == 16 * v.state_count);
            next_state += v.state_count;
        }
        CHECK(next_state == p.total_states);
    }
}

TEST_CASE("a failing task fails the whole call")
{
    Rng rng(5);
    const CipherContext ctx(CipherKey{rng.block()});
    const Bytes msg = rng.bytes(16 * 64);
    for (std::size_t workers : {1, 4}) {
        const WorkPlan p = plan(msg.size(), workers, 1, Mode::ecb, Direction::encrypt);
        CHECK_THROWS_WITH_AS(parallel_apply(msg, ctx, p, std::nullopt,
                                            [](const TaskView& v) {
                                                if (v.task_index == 37)
                                                    throw std::runtime_error("injected");
                                            }),
                             "injected", std::runtime_error);
    }
}

TEST_CASE("parallel_apply argument checks")
{
    Rng rng(6);
    const CipherContext ctx(CipherKey{rng.block()});
    const Bytes msg = rng.bytes(64);
    const WorkPlan p = plan(64, 2, 1, Mode::ecb, Direction::encrypt);
    CHECK_THROWS_AS(parallel_apply(Bytes(48), ctx, p), std::invalid_argument);
    CHECK_THROWS_AS(parallel_apply(msg, ctx, p, IV{}), std::invalid_argument);

    WorkPlan ctr = plan(64, 2, 1, Mode::ctr, Direction::encrypt);
    CHECK_THROWS_AS(parallel_apply(msg, ctx, ctr), std::invalid_argument);

    WorkPlan forged = p;
    forged.mode = Mode::cbc;
    CHECK_THROWS_AS(parallel_apply(msg, ctx, forged), ClassificationError);
}

TEST_CASE("context is unchanged by parallel runs")
{
    Rng rng(7);
    const CipherContext ctx(CipherKey{rng.block()});
    const std::uint64_t before = ctx.fingerprint();
    const Bytes msg = rng.bytes(16 * 500);
    for (int i = 0; i < 10; ++i) {
        (void)parallel_apply(msg, ctx, plan(msg.size(), 4, 3, Mode::ecb, Direction::encrypt));
        (void)parallel_apply(msg, ctx, plan(msg.size(), 4, 3, Mode::ctr, Direction::decrypt), IV{rng.block()});
    }
    CHECK(ctx.fingerprint() == before);

    const CipherContext other(CipherKey{rng.block()});
    CHECK(other.fingerprint() != before);
}
