"""Contains constants for the test files paths"""

_BASE_INVALID_PATH = './tests/files/invalid_files'

MISSING_VALUE_CONFIG = f'{_BASE_INVALID_PATH}/missing_value.cfg'
BAD_KEY_CONFIG = f'{_BASE_INVALID_PATH}/bad_key.cfg'
DUPLICATE_CONFIG = f'{_BASE_INVALID_PATH}/duplicate.cfg'
UNKNOWN_KEY_CONFIG = f'{_BASE_INVALID_PATH}/unknown_key.cfg'
BAD_VALUE_CONFIG = f'{_BASE_INVALID_PATH}/bad_value.cfg'

_BASE_VALID_PATH = './tests/files/valid'
VALID_RUN_CONFIG = f'{_BASE_VALID_PATH}/run.cfg'
VALID_SWEEP_CONFIG = f'{_BASE_VALID_PATH}/sweep.cfg'
VALID_SPT_CH_CONFIG = f'{_BASE_VALID_PATH}/spt_ch.conf'

# These files don't exists and are used to force specific errors in the tests
NONE_PATH = None
EMPTY_PATH = ''
NOT_FOUND_CONFIG = 'not_found.cfg'
INVALID_CONFIG_EXTENSION = './tests/files/hello.config'
