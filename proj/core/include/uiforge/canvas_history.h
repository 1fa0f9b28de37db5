#pragma once

#include <cstddef>
#include <vector>

#include "uiforge/store.h"

namespace uiforge {

using CanvasLayout = std::vector<CanvasSlot>;

// Session-scoped undo/redo over canvas layout changes. Not persisted.
class CanvasLayoutHistory {
 public:
  explicit CanvasLayoutHistory(CanvasLayout initial = {}, std::size_t max_depth = 100);

  const CanvasLayout& current() const { return states_[index_]; }

  // Records a new layout; discards any redo states.
  void apply(CanvasLayout next);
  // "Clear canvas" as an undoable step.
  void clear() { apply({}); }

  bool can_undo() const { return index_ > 0; }
  bool can_redo() const { return index_ + 1 < states_.size(); }
  bool undo();
  bool redo();

 private:
  std::vector<CanvasLayout> states_;
  std::size_t index_ = 0;
  std::size_t max_depth_;
};

}  // namespace uiforge
