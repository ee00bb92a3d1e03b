#pragma once

namespace survopt {

// Several published MSE expressions admit two defensible readings (a sign
// or a power that looks like a slip). `strict` evaluates the text exactly
// as written; `sign_consistent` applies the minimal repair that restores
// internal consistency. Selection is global via the CLI.
enum class Convention { strict, sign_consistent };

}  // namespace survopt
