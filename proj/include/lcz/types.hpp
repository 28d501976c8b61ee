// Copyright 2026 The lcz Authors
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

#include <Eigen/Dense>

namespace lcz {

/// Angle vectors are dense Eigen column vectors.
template <typename Scalar>
using AngleVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using Angles = AngleVector<double>;

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace lcz
