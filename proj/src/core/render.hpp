// Copyright 2026 The egypt Authors
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
#ifndef EGYPT_CORE_RENDER_HPP
#define EGYPT_CORE_RENDER_HPP

// Text renderings shared by the C API and the CLI. JSON output is one JSON
// document per line; big integers are always decimal strings.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core/expansion.hpp"
#include "core/gapfast.hpp"
#include "core/randwalk.hpp"
#include "core/recovery.hpp"
#include "core/scanner.hpp"
#include "core/sequences.hpp"

namespace egypt {

enum class Format { kTable, kJson, kCsv };

Format parse_format(std::string_view text);

std::string render(const Expansion& expansion, Format format);
std::string render(const GapTrace& trace, Format format);
std::string render(const NaiveGaps& gaps, Format format);
std::string render(std::span<const RecoveryRecord> records, Format format);
std::string render_sequence(std::span<const Integer> terms, Format format);
std::string render(const GrowthEstimate& estimate, Format format);
std::string render(const WalkStats& stats, Format format);
std::string render_hits_csv(const WalkStats& stats);

// Always JSON.
std::string render_json(const ScanSummary& summary);
std::string render_json(const VerifyReport& report);
std::string render_mismatches_json(const Integer& p, const Integer& q, std::size_t compared,
                                   const std::vector<GapMismatch>& mismatches);

}  // namespace egypt

#endif  // EGYPT_CORE_RENDER_HPP
