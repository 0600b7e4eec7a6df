#ifndef SEMIAUDIT_VERSION_HPP
#define SEMIAUDIT_VERSION_HPP

#ifndef SEMIAUDIT_VERSION
#define SEMIAUDIT_VERSION "0.1.0"
#endif

#endif
