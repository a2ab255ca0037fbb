/* palindrome check */
int main()
{
    char str[500];
    int len, ok = 1;
    int i;
    scanf("%s", str);
    len = strlen(str);
    i = 0;
    while (i < len / 2) {
        if (str[i] != str[len - 1 - i]) {
        ok = 0;
        break;
        }
        i++;
    }
    if (ok)
        printf("yes\n");
    else
        printf("no\n");
    return 0;
}
