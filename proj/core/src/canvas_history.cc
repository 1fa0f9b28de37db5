#include "uiforge/canvas_history.h"

namespace uiforge {

CanvasLayoutHistory::CanvasLayoutHistory(CanvasLayout initial, std::size_t max_depth)
    : max_depth_(max_depth == 0 ? 1 : max_depth) {
  states_.push_back(std::move(initial));
}

void CanvasLayoutHistory::apply(CanvasLayout next) {
  states_.resize(index_ + 1);
  states_.push_back(std::move(next));
  if (states_.size() > max_depth_ + 1) states_.erase(states_.begin());
  index_ = states_.size() - 1;
}

bool CanvasLayoutHistory::undo() {
  if (!can_undo()) return false;
  --index_;
  return true;
}

bool CanvasLayoutHistory::redo() {
  if (!can_redo()) return false;
  ++index_;
  return true;
}

}  // namespace uiforge
