// Copyright 2026 The atlkf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "model.hpp"

namespace atlk {

// Loads a model from AMF text. `_` wildcards in transition source locals and
// actions expand over the declared locals / the protocol-enabled actions of
// the expanded source state.
Model loadModel(const std::string& text);
Model loadModelFile(const std::string& path);

// Canonical AMF rendering; loadModel(printModel(m)) is isomorphic to m.
std::string printModel(const Model& m);

}  // namespace atlk
