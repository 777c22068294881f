#!/usr/bin/env python3

import logging
import sys
from pathlib import Path

from dotenv import load_dotenv

project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

# Variáveis HNFF_* do .env entram no ambiente antes das configurações
load_dotenv(project_root / ".env")


def setup_logging(settings) -> None:
    """
    Configura os logs de diagnóstico.

    Saída no stderr (stdout fica reservado aos resultados) e, se
    HNFF_LOG_FILE estiver definido, também em arquivo no modo append.

    Níveis disponíveis: DEBUG, INFO, WARNING, ERROR
    """
    handlers = [logging.StreamHandler(sys.stderr)]
    if settings.log_file:
        handlers.append(logging.FileHandler(settings.log_file, mode="a"))

    logging.basicConfig(
        level=getattr(logging, settings.log_level, logging.WARNING),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=handlers,
    )
    # Suprime logs verbosos de bibliotecas externas
    logging.getLogger("asyncio").setLevel(logging.ERROR)


def main():
    """
    Ponto de entrada do comando hnff.

    Carrega as configurações, prepara os logs e devolve ao shell o código de
    saída da CLI.
    """
    from cli.commands import main as cli_main
    from verify.config import get_settings

    setup_logging(get_settings())
    try:
        sys.exit(cli_main())
    except KeyboardInterrupt:
        sys.exit(130)


if __name__ == "__main__":
    main()
