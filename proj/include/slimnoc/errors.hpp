/*
 * Copyright 2026 The slimnoc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SLIMNOC_ERRORS_HPP
#define SLIMNOC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace slimnoc {

enum class errc {
  non_prime_power,
  not_primitive,
  invalid_q,
  invalid_u,
  construction_invalid,
  not_slim_noc,
  collision_detected,
  disconnected,
  insufficient_vcs,
  setup_error,
  stall_error,
  infeasible_n,
  unknown_preset,
  missing_input,
  bad_input,
};

/// Error with a machine-readable code. The CLI maps codes to exit status:
/// validation/infeasibility errors exit 3, simulation stalls exit 4.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const { return code_; }

  int exit_code() const {
    switch (code_) {
      case errc::stall_error:
        return 4;
      default:
        return 3;
    }
  }

 private:
  errc code_;
};

const char* errc_name(errc c);

}  // namespace slimnoc

#endif
