int main()
{
    char str[500];
    int len, is_pal = 1;
    int idx;
    scanf("%s", str);
    len = strlen(str);
    idx = 0;
    while (idx < len / 2) {
        if (str[idx] != str[len - 1 - idx]) {
        is_pal = 0;
        break;
        }
        idx++;
    }
    if (is_pal)
        printf("yes\n");
    else
        printf("no\n");
    return 0;
}
