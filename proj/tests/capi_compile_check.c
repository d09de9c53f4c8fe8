/* The public header must be consumable from plain C. */
#include "wsar/wsar.h"

const char* wsar_capi_c_version(void) { return wsar_version(); }
