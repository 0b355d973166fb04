#ifndef LPKIT_PARALLEL_HPP
#define LPKIT_PARALLEL_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace lpkit {

// Worker cap: LPKIT_THREADS when set to a positive integer, otherwise the
// hardware concurrency.
std::size_t thread_cap();

// Runs body(i) for i in [0, count). Each index writes only its own slot, so
// results are identical to a sequential loop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

// SplitMix64 finaliser; used to derive independent per-task seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

}  // namespace lpkit

#endif  // LPKIT_PARALLEL_HPP
