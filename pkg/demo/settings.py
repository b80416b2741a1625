# Project settings for the demo jobs.
# Select with: WITTSUM_SETTINGS_MODULE=demo.settings wittsum verify --input demo/jobs/kloosterman.json

LOG_LEVEL = 'INFO'


# overrides
# =========
# merged key by key into the packaged `WITTSUM` defaults

WITTSUM = {
    "threads": 1,
    "sum_budget": 2_000_000,
    "tolerance": 1e-9,
}
