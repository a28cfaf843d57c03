// Copyright (c) 2026 The rotext authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "rotext/geometry.hpp"

namespace rotext {

/// Annotated box. `ignore` marks unreadable regions (the "###"
/// transcription convention): they never produce positives and are
/// excluded from recall denominators.
struct GroundTruth {
  RotatedBox box;
  bool ignore = false;
};

}  // namespace rotext
