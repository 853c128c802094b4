"""Integration tests for clinTrAI package."""