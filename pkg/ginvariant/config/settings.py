import os


class Settings:
    # Largest prime searched when looking for a prime in a non-principal ideal class
    SEARCH_CAP: int = 10000

    # Width of the window [C, C + margin) checked by the theorem-bound coverage suite
    VERIFY_MARGIN: int = 512

    # Worker threads; 0 means one per CPU
    THREADS: int = 0

    # Largest d for which the brute-force oracle is allowed to run
    ORACLE_D_CAP: int = 1000

    # Largest supported bound C (exclusive); supports are dense arrays of length C
    MAX_BOUND: int = 10 ** 9

    # Version tag written into every JSON report
    SCHEMA_VERSION: str = "1"

    # Logging (diagnostics go to standard error)
    LOG_LEVEL: str = "INFO"
    LOG_FORMAT: str = "[%(asctime)s] %(levelname)-8s %(name)s: %(message)s"
    LOG_DATE_FORMAT: str = "%Y-%m-%d %H:%M:%S"

    def resolve_threads(self, threads: int) -> int:
        """
        Turn the --threads flag into a worker count.

        Args:
            threads: Requested worker count, 0 for automatic.

        Returns:
            A worker count of at least 1.
        """
        if threads < 0:
            raise ValueError(f"threads must be >= 0, got {threads}")
        if threads == 0:
            return os.cpu_count() or 1
        return threads


# Create a singleton settings instance
settings = Settings()
