// Copyright (c) the bfa developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <string_view>
#include <vector>

namespace bfa::parse {

/// Complex literal: "1.5", "0.5i", "1+2i", "1.5-0.5i", "i", "-i", and the
/// shorthand "e^x" for exp(x) (also "-e^x", "e^xi" for exp(x) i).
std::complex<double> complex_literal(std::string_view text);

/// Comma-separated list of complex literals.
std::vector<std::complex<double>> point_list(std::string_view text);

}  // namespace bfa::parse
