"""Unit tests for clinTrAI package."""