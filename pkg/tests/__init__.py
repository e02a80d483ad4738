"""
Test Suite

프로젝트의 모든 테스트를 포함합니다.
"""
