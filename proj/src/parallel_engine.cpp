#include "aesbench/parallel_engine.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace aesbench {

namespace {

void require_iv_shape(Mode mode, const std::optional<IV>& iv)
{
    if (mode == Mode::ecb && iv)
        throw std::invalid_argument("ecb does not take an IV");
    if (mode != Mode::ecb && !iv)
        throw std::invalid_argument(std::string(to_string(mode)) + " requires an IV");
}

// Processes one task's slice. Reads nothing but `in`, ctx and the counter.
void run_task(const TaskView& task, const CipherContext& ctx, Mode mode, Direction direction,
              const std::optional<Counter>& counter)
{
    for (std::size_t s = 0; s < task.state_count; ++s) {
        Block in;
        std::copy_n(task.input.begin() + static_cast<std::ptrdiff_t>(s * kBlockSize), kBlockSize, in.begin());
        Block out;
        if (mode == Mode::ecb) {
            out = direction == Direction::encrypt ? ctx.encrypt(in) : ctx.decrypt(in);
        } else {
            const Block keystream = ctx.encrypt(counter->at(task.first_state + s));
            for (std::size_t i = 0; i < kBlockSize; ++i)
                out[i] = in[i] ^ keystream[i];
        }
        std::copy(out.begin(), out.end(), task.output.begin() + static_cast<std::ptrdiff_t>(s * kBlockSize));
    }
}

} // namespace

std::string_view to_string(Direction d) noexcept
{
    return d == Direction::encrypt ? "encrypt" : "decrypt";
}

WorkPlan plan(std::size_t message_len_bytes, std::size_t worker_count, std::size_t granularity, Mode mode,
              Direction direction)
{
    if (message_len_bytes == 0 || message_len_bytes % kBlockSize != 0)
        throw std::invalid_argument("plan: message length " + std::to_string(message_len_bytes) +
                                    " is not a positive multiple of 16");
    if (worker_count == 0)
        throw std::invalid_argument("plan: worker_count must be at least 1");
    if (granularity == 0)
        throw std::invalid_argument("plan: granularity must be at least 1");
    if (classify_parallelism(mode) != Parallelism::suitable)
        throw ClassificationError("plan: mode " + std::string(to_string(mode)) +
                                  " chains blocks and cannot be split into independent states");

    return WorkPlan{
        .total_states = message_len_bytes / kBlockSize,
        .granularity = granularity,
        .worker_count = worker_count,
        .direction = direction,
        .mode = mode,
    };
}

Bytes parallel_apply(std::span<const Byte> msg, const CipherContext& ctx, const WorkPlan& plan,
                     const std::optional<IV>& iv, const TaskObserver& observer)
{
    if (plan.total_states * kBlockSize != msg.size())
        throw std::invalid_argument("parallel_apply: plan covers " + std::to_string(plan.total_states) +
                                    " states but message has " + std::to_string(msg.size()) + " bytes");
    if (classify_parallelism(plan.mode) != Parallelism::suitable)
        throw ClassificationError("parallel_apply: mode " + std::string(to_string(plan.mode)) +
                                  " is not parallelizable");
    if (plan.granularity == 0 || plan.worker_count == 0)
        throw std::invalid_argument("parallel_apply: granularity and worker_count must be at least 1");
    require_iv_shape(plan.mode, iv);

    const std::optional<Counter> counter = iv ? std::optional<Counter>(Counter{iv->bytes}) : std::nullopt;
    const std::size_t tasks = plan.task_count();
    Bytes out(msg.size());

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            if (failed.load(std::memory_order_relaxed))
                return;
            const std::size_t t = next.fetch_add(1, std::memory_order_relaxed);
            if (t >= tasks)
                return;
            const std::size_t first = t * plan.granularity;
            const std::size_t count = std::min(plan.granularity, plan.total_states - first);
            const TaskView view{
                .task_index = t,
                .first_state = first,
                .state_count = count,
                .input = msg.subspan(first * kBlockSize, count * kBlockSize),
                .output = std::span<Byte>(out).subspan(first * kBlockSize, count * kBlockSize),
            };
            try {
                if (observer)
                    observer(view);
                run_task(view, ctx, plan.mode, plan.direction, counter);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!first_error)
                    first_error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };

    const std::size_t threads = std::min(plan.worker_count, tasks);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t i = 0; i < threads; ++i)
            pool.emplace_back(worker);
    } // joined here

    if (first_error)
        std::rethrow_exception(first_error);
    return out;
}

Bytes sequential_apply(std::span<const Byte> msg, const CipherContext& ctx, Mode mode, Direction direction,
                       const std::optional<IV>& iv)
{
    require_iv_shape(mode, iv);
    const bool enc = direction == Direction::encrypt;
    switch (mode) {
    case Mode::ecb: return enc ? ecb_encrypt(msg, ctx) : ecb_decrypt(msg, ctx);
    case Mode::cbc: return enc ? cbc_encrypt(msg, *iv, ctx) : cbc_decrypt(msg, *iv, ctx);
    case Mode::cfb: return enc ? cfb_encrypt(msg, *iv, ctx) : cfb_decrypt(msg, *iv, ctx);
    case Mode::ofb: return enc ? ofb_encrypt(msg, *iv, ctx) : ofb_decrypt(msg, *iv, ctx);
    case Mode::ctr: {
        const Counter counter{iv->bytes};
        return enc ? ctr_encrypt(msg, counter, ctx) : ctr_decrypt(msg, counter, ctx);
    }
    }
    throw std::invalid_argument("sequential_apply: unknown mode");
}

} // namespace aesbench
