// Copyright 2026 The qsvbench Authors
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

#include "qsv/analysis.hpp"
#include "qsv/bench.hpp"
#include "qsv/circuit.hpp"
#include "qsv/errors.hpp"
#include "qsv/gates.hpp"
#include "qsv/qasm.hpp"
#include "qsv/statevector.hpp"
#include "qsv/taskgen.hpp"
#include "qsv/validate.hpp"
