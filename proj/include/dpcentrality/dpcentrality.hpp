// Copyright 2026 The dpcentrality Authors
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

#include "dpcentrality/centrality.hpp"
#include "dpcentrality/error.hpp"
#include "dpcentrality/evaluation.hpp"
#include "dpcentrality/format.hpp"
#include "dpcentrality/generators.hpp"
#include "dpcentrality/graph.hpp"
#include "dpcentrality/graph_io.hpp"
#include "dpcentrality/mechanism.hpp"
#include "dpcentrality/neighbors.hpp"
#include "dpcentrality/random.hpp"
#include "dpcentrality/report.hpp"
#include "dpcentrality/sensitivity.hpp"
#include "dpcentrality/spectral.hpp"
