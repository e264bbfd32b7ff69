// Copyright 2026 The SphereHull Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "spherehull/bench.hpp"
#include "spherehull/errors.hpp"
#include "spherehull/geometry.hpp"
#include "spherehull/hull2d.hpp"
#include "spherehull/hull3d.hpp"
#include "spherehull/hull_mesh.hpp"
#include "spherehull/meshio.hpp"
#include "spherehull/minkowski.hpp"
#include "spherehull/support_tree.hpp"
#include "spherehull/validation.hpp"
