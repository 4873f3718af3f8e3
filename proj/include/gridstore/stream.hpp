#ifndef GRIDSTORE_STREAM_HPP_
#define GRIDSTORE_STREAM_HPP_

#include <cstddef>
#include <vector>

#include "gridstore/types.hpp"

namespace gridstore {

// Arrival sequence seen through a window of `window` upcoming loads.
// Every access is logged so callers can audit how far a planner looked.
class ArrivalStream {
 public:
  struct Access {
    std::size_t cursor;
    std::size_t offset;
  };

  ArrivalStream(std::vector<Load> arrivals, std::size_t window);

  // Load `offset` positions past the cursor; offset 0 is the current arrival.
  // Throws LookaheadExceeded when offset >= window.
  Load peek(std::size_t offset);
  // Consumes the current arrival.
  Load next();

  std::size_t window() const { return window_; }
  std::size_t position() const { return cursor_; }
  std::size_t remaining() const { return arrivals_.size() - cursor_; }
  std::size_t total() const { return arrivals_.size(); }
  // Deepest access so far, counted in loads (peek(0) has depth 1).
  std::size_t max_peek_depth() const { return max_depth_; }
  const std::vector<Access>& log() const { return log_; }

 private:
  std::vector<Load> arrivals_;
  std::size_t window_;
  std::size_t cursor_ = 0;
  std::size_t max_depth_ = 0;
  std::vector<Access> log_;
};

}  // namespace gridstore

#endif  // GRIDSTORE_STREAM_HPP_
