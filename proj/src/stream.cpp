#include "gridstore/stream.hpp"

#include <algorithm>
#include <string>

namespace gridstore {

ArrivalStream::ArrivalStream(std::vector<Load> arrivals, std::size_t window)
    : arrivals_(std::move(arrivals)), window_(window) {
  if (window_ == 0) throw Error(ErrorCode::InvalidArgument, "lookahead window must be positive");
}

Load ArrivalStream::peek(std::size_t offset) {
  if (offset >= window_) {
    throw Error(ErrorCode::LookaheadExceeded,
                "peek at offset " + std::to_string(offset) + " exceeds lookahead " + std::to_string(window_));
  }
  if (cursor_ + offset >= arrivals_.size()) {
    throw Error(ErrorCode::InvalidArgument, "peek past the end of the arrival sequence");
  }
  log_.push_back({cursor_, offset});
  max_depth_ = std::max(max_depth_, offset + 1);
  return arrivals_[cursor_ + offset];
}

Load ArrivalStream::next() {
  Load load = peek(0);
  ++cursor_;
  return load;
}

}  // namespace gridstore
