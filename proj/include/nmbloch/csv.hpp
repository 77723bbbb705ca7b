// Copyright 2026 the nmbloch authors
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

#include <filesystem>
#include <string>

#include "nmbloch/trace.hpp"

namespace nmbloch {

inline constexpr const char* kTraceCsvHeader =
    "t,F,rho11,rho22,rho33,re_rho12,im_rho12,trace,herm_err";

// Serializes a trace with 17 significant digits per field; byte-for-byte
// deterministic.
std::string trace_to_csv(const FidelityTrace& trace);
void write_trace_csv(const std::filesystem::path& path,
                     const FidelityTrace& trace);

// Throws config_error on a header or field-count mismatch.
FidelityTrace read_trace_csv(const std::filesystem::path& path);

}  // namespace nmbloch
