/*
   Copyright 2026 the logconn authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LOGCONN_ERRORS_HPP
#define LOGCONN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace logconn {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two marked points coincide.
class duplicate_point_error : public error {
public:
    using error::error;
};

/// Matrix sizes, rank, or point/residue association do not line up.
class dimension_mismatch_error : public error {
public:
    using error::error;
};

/// A residue fails the rigidity hypothesis required by the summand criterion.
class not_rigid_error : public error {
public:
    using error::error;
};

/// Internal consistency failure: a rigid residue did not preserve the
/// canonical summands. Unreachable when rigidity holds.
class summand_not_preserved_error : public error {
public:
    using error::error;
};

/// Malformed input file; message carries the offending field path.
class parse_error : public error {
public:
    using error::error;
};

} // namespace logconn

#endif
