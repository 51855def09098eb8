#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Traditional Chinese Language Module (繁體中文語言模組)

This module contains the Traditional Chinese language dictionary for text output.
"""

# Language name for display
LANGUAGE_NAME = "繁體中文"

LANGUAGE_DICT = {
    "app": {
        "title": "monocheck",
        "description": "判定冪合成多項式 f(x^k) 是否為單生成（monogenic）。",
    },
    "verdict": {
        "Monogenic": "單生成",
        "NotMonogenic": "非單生成",
        "Inconclusive": "無法判定",
        "HypothesisViolated": "不符合族假設",
    },
    "reason": {
        "BaseNotMonogenic": "f 非單生成",
        "PrimePowerObstruction": "p 整除 f(x^p) 的指數",
        "ConstantTermNotSquarefree": "f(0) 非無平方因子",
        "Reducible": "f(x^k) 可約",
    },
    "tri": {
        "yes": "是",
        "no": "否",
        "unknown": "未知",
        "none": "未檢查",
    },
    "report": {
        "polynomial": "多項式",
        "composition": "合成",
        "verdict": "判定",
        "witness": "見證質數",
        "reason": "原因",
        "cause": "未決原因",
        "method": "方法",
        "conditions": "條件",
        "monogenic_base": "f 單生成",
        "prime_checks": "質數檢查",
        "pass": "通過",
        "fail": "失敗",
        "f0_squarefree": "f(0) 無平方因子",
        "certificate": "不可約性",
        "notes": "備註",
        "timings": "耗時",
    },
    "disc": {
        "discriminant": "判別式",
        "factored": "分解",
        "composition": "f(x^{l}) 判別式（絕對值）",
    },
    "dedekind": {
        "divides": "{p} 整除指數",
        "coprime": "{p} 不整除指數",
        "witness": "見證因式",
    },
    "scan": {
        "none": "沒有質數 p <= {bound} 整除 f(x^p) 的指數",
        "found": "整除 f(x^p) 指數的質數 p <= {bound}",
    },
    "family": {
        "summary": "共 {total} 例：單生成 {monogenic}，非單生成 {not_monogenic}，"
                   "無法判定 {inconclusive}，不符合假設 {violated}",
        "skipped": "{path} 中已有 {count} 例",
    },
    "error": {
        "prefix": "錯誤",
    },
}
