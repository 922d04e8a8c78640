// Copyright 2026 The Demon Solitaire Authors
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

#ifndef DEMON_ERROR_HPP
#define DEMON_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace demon {

enum class ErrorCode {
  BadGameNumber,
  BadCardNumber,
  WrongStackCount,
  EmptyStack,
  CardOutOfRange,
  DuplicateCard,
  IllegalMove,
  IllegalResponse,
  PreconditionViolated,
  HallViolation,
  NotReducible,
  ProfileUnsupported,
  NonconformingDemon,
  ParseError,
  NotBipartite,
  TooLarge,
  DemonNonconformance,
  UnknownSession,
  WrongTurn,
  Busy,
  BadRequest,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadGameNumber: return "BadGameNumber";
    case ErrorCode::BadCardNumber: return "BadCardNumber";
    case ErrorCode::WrongStackCount: return "WrongStackCount";
    case ErrorCode::EmptyStack: return "EmptyStack";
    case ErrorCode::CardOutOfRange: return "CardOutOfRange";
    case ErrorCode::DuplicateCard: return "DuplicateCard";
    case ErrorCode::IllegalMove: return "IllegalMove";
    case ErrorCode::IllegalResponse: return "IllegalResponse";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::HallViolation: return "HallViolation";
    case ErrorCode::NotReducible: return "NotReducible";
    case ErrorCode::ProfileUnsupported: return "ProfileUnsupported";
    case ErrorCode::NonconformingDemon: return "NonconformingDemon";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DemonNonconformance: return "DemonNonconformance";
    case ErrorCode::UnknownSession: return "UnknownSession";
    case ErrorCode::WrongTurn: return "WrongTurn";
    case ErrorCode::Busy: return "Busy";
    case ErrorCode::BadRequest: return "BadRequest";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// that the CLI and the HTTP layer can map it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        detail_(message) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace demon

#endif  // DEMON_ERROR_HPP
