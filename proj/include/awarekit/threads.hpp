#ifndef AWAREKIT_THREADS_HPP_
#define AWAREKIT_THREADS_HPP_

namespace awarekit {

// Thread count for parallel kernels: AWAREKIT_THREADS if it holds a positive
// integer, else the OpenMP default.
int default_thread_count();

// `requested` if positive, else default_thread_count().
int resolve_threads(int requested);

}  // namespace awarekit

#endif  // AWAREKIT_THREADS_HPP_
