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

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qsv {

/// Base of every domain error. `name()` is the typed outcome name surfaced
/// by the CLI (e.g. "MemoryLimit", "UnknownGate").
class Error : public std::runtime_error {
  public:
    Error(std::string name, const std::string &what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string &name() const noexcept { return name_; }

  private:
    std::string name_;
};

enum class CircuitErrorCode { QubitOutOfRange, DuplicateQubit, ParamArityMismatch };

inline const char *to_string(CircuitErrorCode code) {
    switch (code) {
    case CircuitErrorCode::QubitOutOfRange:
        return "QubitOutOfRange";
    case CircuitErrorCode::DuplicateQubit:
        return "DuplicateQubit";
    case CircuitErrorCode::ParamArityMismatch:
        return "ParamArityMismatch";
    }
    return "?";
}

class CircuitError : public Error {
  public:
    CircuitError(CircuitErrorCode code, std::size_t op_index, const std::string &detail)
        : Error(to_string(code), "op " + std::to_string(op_index) + ": " + detail),
          code_(code), op_index_(op_index) {}

    CircuitErrorCode code() const noexcept { return code_; }
    std::size_t op_index() const noexcept { return op_index_; }

  private:
    CircuitErrorCode code_;
    std::size_t op_index_;
};

/// Resource exhaustion classes: time, memory and design limits.
class ResourceLimit : public Error {
  public:
    ResourceLimit(std::string name, int num_qubits, const std::string &what)
        : Error(std::move(name), what), num_qubits_(num_qubits) {}

    int num_qubits() const noexcept { return num_qubits_; }

  private:
    int num_qubits_;
};

class MemoryLimit : public ResourceLimit {
  public:
    MemoryLimit(int num_qubits, std::uint64_t required, std::uint64_t budget)
        : ResourceLimit("MemoryLimit", num_qubits,
                        "MemoryLimit(" + std::to_string(num_qubits) + "): " +
                            std::to_string(required) + " bytes required, budget " +
                            std::to_string(budget)),
          required_(required), budget_(budget) {}

    std::uint64_t required_bytes() const noexcept { return required_; }
    std::uint64_t budget_bytes() const noexcept { return budget_; }

  private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

class TimeLimit : public ResourceLimit {
  public:
    /// `gate_index` is the index of the first gate that was not applied,
    /// which equals the number of completed gates.
    TimeLimit(int num_qubits, std::size_t gate_index)
        : ResourceLimit("TimeLimit", num_qubits,
                        "TimeLimit(" + std::to_string(num_qubits) + ") at gate " +
                            std::to_string(gate_index)),
          gate_index_(gate_index) {}

    std::size_t gate_index() const noexcept { return gate_index_; }

  private:
    std::size_t gate_index_;
};

class DesignLimit : public ResourceLimit {
  public:
    DesignLimit(int num_qubits, const std::string &reason)
        : ResourceLimit("DesignLimit", num_qubits,
                        "DesignLimit(" + std::to_string(num_qubits) + "): " + reason) {}
};

} // namespace qsv
