// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "csa/arrangement.hpp"
#include "csa/circuits_mat.hpp"
#include "csa/common.hpp"
#include "csa/coordinate_maps.hpp"
#include "csa/factored.hpp"
#include "csa/freeness.hpp"
#include "csa/graph.hpp"
#include "csa/graph_gen.hpp"
#include "csa/graph_io.hpp"
#include "csa/int_linalg.hpp"
#include "csa/lattice.hpp"
#include "csa/obstruction.hpp"
#include "csa/polynomial.hpp"
#include "csa/serialization.hpp"
#include "csa/simplicial.hpp"
