#pragma once

// Data-parallel execution of the block-independent modes (ECB, CTR).
//
// The message is split into 16-byte states. A task owns `granularity`
// consecutive states: it reads only its slice of the input and writes only
// the matching slice of a preallocated output buffer. The CipherContext is the
// only data shared between tasks and it is never written. Tasks are scheduled
// onto at most `worker_count` threads in any order; the result does not depend
// on the schedule.

#include "aesbench/cipher_context.hpp"
#include "aesbench/modes.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>

namespace aesbench {

enum class Direction { encrypt, decrypt };

std::string_view to_string(Direction d) noexcept;

/// Raised when a mode whose blocks depend on each other is handed to the
/// parallel engine.
class ClassificationError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

struct WorkPlan
{
    std::size_t total_states = 0;
    std::size_t granularity = 1;
    std::size_t worker_count = 1;
    Direction direction = Direction::encrypt;
    Mode mode = Mode::ecb;

    std::size_t task_count() const noexcept { return (total_states + granularity - 1) / granularity; }
};

/// Validates the request and sizes the plan. Throws std::invalid_argument for
/// lengths that are not a positive multiple of 16 or zero counts, and
/// ClassificationError for CBC, CFB and OFB.
WorkPlan plan(std::size_t message_len_bytes, std::size_t worker_count, std::size_t granularity, Mode mode,
              Direction direction);

/// What one task was given. Handed to the observer before the task runs.
struct TaskView
{
    std::size_t task_index = 0;
    std::size_t first_state = 0;
    std::size_t state_count = 0;
    std::span<const Byte> input;
    std::span<Byte> output;
};

/// Test hook. Called concurrently from worker threads; an exception thrown
/// here fails the task and therefore the whole call.
using TaskObserver = std::function<void(const TaskView&)>;

/// Runs the plan over msg. For CTR, iv is the counter base and is required;
/// for ECB it must be absent. If any task fails, the first failure is
/// rethrown after all workers have stopped and no output is returned.
Bytes parallel_apply(std::span<const Byte> msg, const CipherContext& ctx, const WorkPlan& plan,
                     const std::optional<IV>& iv = std::nullopt, const TaskObserver& observer = {});

/// Single-threaded reference over a padded message. Supports all five modes;
/// it is the benchmark baseline and the oracle for parallel_apply.
Bytes sequential_apply(std::span<const Byte> msg, const CipherContext& ctx, Mode mode, Direction direction,
                       const std::optional<IV>& iv = std::nullopt);

} // namespace aesbench
