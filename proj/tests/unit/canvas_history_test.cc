#include <gtest/gtest.h>

#include "uiforge/canvas_history.h"

namespace uiforge {
namespace {

CanvasLayout layout(int n) {
  CanvasLayout out;
  for (int i = 0; i < n; ++i) out.push_back({"slot-" + std::to_string(i), i * 10.0, 0, 100, 100, i});
  return out;
}

TEST(CanvasHistory, UndoRedo) {
  CanvasLayoutHistory h(layout(1));
  EXPECT_FALSE(h.can_undo());
  h.apply(layout(2));
  h.apply(layout(3));
  EXPECT_EQ(h.current().size(), 3u);
  EXPECT_TRUE(h.undo());
  EXPECT_EQ(h.current().size(), 2u);
  EXPECT_TRUE(h.undo());
  EXPECT_FALSE(h.undo());
  EXPECT_EQ(h.current(), layout(1));
  EXPECT_TRUE(h.redo());
  EXPECT_EQ(h.current().size(), 2u);
  h.apply(layout(5));
  EXPECT_FALSE(h.can_redo());
  EXPECT_FALSE(h.redo());
}

TEST(CanvasHistory, ClearIsUndoable) {
  CanvasLayoutHistory h(layout(4));
  h.clear();
  EXPECT_TRUE(h.current().empty());
  EXPECT_TRUE(h.undo());
  EXPECT_EQ(h.current(), layout(4));
}

TEST(CanvasHistory, DepthBounded) {
  CanvasLayoutHistory h({}, 3);
  for (int i = 1; i <= 10; ++i) h.apply(layout(i));
  int undos = 0;
  while (h.undo()) ++undos;
  EXPECT_EQ(undos, 3);
  EXPECT_EQ(h.current().size(), 7u);
}

}  // namespace
}  // namespace uiforge
